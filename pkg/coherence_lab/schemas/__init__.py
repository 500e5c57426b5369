# Pydantic Data Transfer Objects
