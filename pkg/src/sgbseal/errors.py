"""Exception hierarchy shared by the codec, AEAD boundary and stores."""


class SgbSealError(Exception):
    """Base class for all errors raised by this package."""


class MalformedFrame(SgbSealError):
    """Input bytes do not form a valid 56-byte frame."""


class AuthenticationFailure(SgbSealError):
    """AES-GCM tag verification failed.

    Deliberately carries no detail about which part of the input
    (body, tag, IV or AAD) caused the mismatch.
    """


class CounterExhausted(SgbSealError):
    """The 32-bit monotonic counter reached its maximum; transmission must halt."""


class StateFormatError(SgbSealError):
    """A serialized replay-state blob has bad magic, version, length or checksum."""


class VectorFormatError(SgbSealError):
    """A test-vector file is missing fields or carries wrong-length hex values."""
