"""Exception hierarchy shared across the package."""


class BossError(Exception):
    """Base class for all errors raised by this package."""


class CryptoError(BossError):
    pass


class AuthenticationError(CryptoError):
    """Ciphertext failed authentication: wrong key, tampering, or truncation."""


class FramingError(BossError):
    """A byte stream does not parse as the expected wire structure."""


class LedgerError(BossError):
    pass


class ChainLinkageError(LedgerError):
    """A block does not extend the chain tip it was appended to."""


class ChainCorruptionError(LedgerError):
    """Serialized chain bytes fail integrity checks."""


class NotFoundError(LedgerError):
    pass


class NotAMemberError(LedgerError):
    """Value access to a private collection entry from a non-member peer."""


class PolicyError(BossError):
    pass


class ContractError(BossError):
    """A contract function refused to produce a write set.

    ``code`` is a stable machine-readable identifier; the message is free text.
    """

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


class TransferError(BossError):
    pass


class DuplicateNameError(TransferError):
    pass


class DigestMismatchError(TransferError):
    """Received bytes do not hash to the digest announced in the close frame."""


class TxFlowError(BossError):
    pass


class EndorsementError(TxFlowError):
    """An endorser was unreachable, refused, or returned a bad signature."""


class ResponseDivergenceError(TxFlowError):
    """Endorsers returned differing execution results; no transaction assembled."""


class ContractRefusedError(TxFlowError):
    """An endorser executed the contract and returned a signed error response."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
