from ._odpi import (  # noqa: F401
    OdError,
    chain_synth,
    chain_verify,
    classify,
    cmp,
    enumerate,
    normalize,
    qpart,
    selftest,
    validate,
)
