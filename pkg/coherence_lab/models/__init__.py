"""Domain value types.

All types are immutable after construction: numpy buffers are copied and
flagged read-only, so instances can be shared freely between threads.
Validating constructors live in the service layer
(``services.states.density_matrix``, ``services.channels.kraus_channel``).
"""
