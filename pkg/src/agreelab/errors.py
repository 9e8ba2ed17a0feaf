class UnknownWordError(LookupError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"unknown word {word!r}")


class ShapeError(ValueError):
    """Sentence does not fit any shape the AVM backbone handles."""


class LexiconError(ValueError):
    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
