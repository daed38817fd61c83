from .config import ComputeConfig, DEFAULT_CONFIG  # noqa: F401
from .exception import (  # noqa: F401
    InputError,
    InternalVerificationError,
    MatchingSearchError,
)
from .toric.arrangement import ToricArrangement, ToricItem, normalize  # noqa: F401
from .hyperplane.arrangement import Arrangement, HalfspaceForm  # noqa: F401

__version__ = u"0.1.0"
