from .errors import (
    InvalidKupisch,
    ZeroAlgebra,
    NotProjectiveInjective,
    DifferentAlgebra,
    NotCyclicConnected,
    NotInDomain,
    NotLinear,
    NotTauTilting,
    ArcTooLong,
    NotTauRigid,
    LoewyTooSmall,
    ArcNotPresent,
    AlgebraTooLarge,
    AlgebraSpecError,
    MismatchReport
)

__all__ = [
    'InvalidKupisch',
    'ZeroAlgebra',
    'NotProjectiveInjective',
    'DifferentAlgebra',
    'NotCyclicConnected',
    'NotInDomain',
    'NotLinear',
    'NotTauTilting',
    'ArcTooLong',
    'NotTauRigid',
    'LoewyTooSmall',
    'ArcNotPresent',
    'AlgebraTooLarge',
    'AlgebraSpecError',
    'MismatchReport'
]
