class CcpError(Exception):
    """Base class for every error raised by this package."""


class LoadError(CcpError):
    """A lattice, spec file or term could not be loaded."""


class ParseError(LoadError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
            if text:
                message += f": {text[:pos]}<<HERE>>{text[pos:]}"
        super().__init__(message)


class StateCapExceeded(CcpError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"state space exceeded the cap of {cap} configurations")


class MissingDerivedState(CcpError):
    """A domination check needed a configuration outside the partition's domain."""
