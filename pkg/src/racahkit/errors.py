"""Exception hierarchy shared by every module.

``DomainError`` subclasses are mathematical rejections (the CLI maps them to
exit status 2); ``UsageError`` subclasses are malformed input (exit 64).
"""


class RacahKitError(Exception):
    pass


class DomainError(RacahKitError):
    pass


class UsageError(RacahKitError):
    pass


class NonTerminating(DomainError):
    pass


class DenominatorPole(DomainError):
    pass


class InvalidParams(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class InvalidRange(UsageError):
    pass


class ParseError(UsageError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
