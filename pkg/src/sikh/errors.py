class DiagramError(ValueError):
    """Malformed or inconsistent diagram input.  ``location`` points into the document."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug or corrupted data, not bad user input."""
