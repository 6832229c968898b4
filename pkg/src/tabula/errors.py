"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: SchemaError -> 2, protocol
errors (channel/session) -> 3, bundle errors -> 4.
"""


class TabulaError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(TabulaError):
    """A real value does not fit the fixed-point codec's magnitude bound."""


class RoleMismatch(TabulaError):
    """Two shares with incompatible party roles were combined."""


class SchemaError(TabulaError):
    """A model, dataset or input file violates its schema.

    Carries the offending layer index and field name when known.
    """

    def __init__(self, message, layer=None, field=None):
        self.layer = layer
        self.field = field
        where = []
        if layer is not None:
            where.append(f"layer {layer}")
        if field is not None:
            where.append(f"field '{field}'")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ProtocolError(TabulaError):
    """Base class for online-phase failures (CLI exit code 3)."""


class ChannelClosed(ProtocolError):
    """The peer closed the connection mid-protocol."""


class MalformedFrame(ProtocolError):
    """A received frame has an unknown tag or inconsistent length."""


class TagMismatch(ProtocolError):
    """The two parties disagreed on the message tag of a protocol step."""


class SessionMismatch(ProtocolError):
    """HELLO exchange revealed mismatched protocol versions or session ids."""


class LengthMismatch(ProtocolError):
    """Element counts of shares, tables or preprocessing material disagree."""


class DimensionMismatch(ProtocolError):
    """A vector does not match the layer's declared dimensions."""


class TableReused(ProtocolError):
    """A single-use masked table was offered for a second lookup."""


class StalePreproc(ProtocolError):
    """Per-inference linear-layer masks were offered for a second use."""


class BundleError(TabulaError):
    """A preprocessing bundle is corrupt, mismatched or already consumed."""
