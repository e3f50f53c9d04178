class PolygraphError(ValueError):
    """Invalid cell, word or presentation."""


class ParseError(PolygraphError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f'line {line}, column {column}: {message}'
        super().__init__(message)


class TietzeError(PolygraphError):
    """A Tietze move whose side conditions or witness do not check."""
