# Core - Configuration, Logging, Exceptions
