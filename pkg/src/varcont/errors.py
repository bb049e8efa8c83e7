class VarcontError(Exception):
    pass


class NotUnambiguousError(VarcontError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"transducer is ambiguous on input {''.join(map(str, witness))!r}")


class UnknownStateError(VarcontError, KeyError):
    def __str__(self):
        return f"unknown state {self.args[0]!r}"


class ResourceLimitError(VarcontError):
    """A size cap (monoid elements, content sets) was exceeded."""


class UnsupportedVarietyError(VarcontError):
    pass


class ParseError(VarcontError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")
