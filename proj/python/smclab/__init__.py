"""Smart-card password authentication protocol lab.

Five schemes as executable state machines over a deterministic simulated
network, the attack each one falls to, and a verdict matrix scoring all five
against the ten classic security requirements.
"""

from ._core import (
    DIGEST_LEN,
    PROTOCOLS,
    attack_run,
    default_password,
    demo_dictionary,
    evaluate,
    honest_run,
    pairing_identity_holds,
    registration_reveals_password,
    tuple_hash,
    xor_digests,
)

__all__ = [
    "DIGEST_LEN",
    "PROTOCOLS",
    "attack_run",
    "default_password",
    "demo_dictionary",
    "evaluate",
    "honest_run",
    "pairing_identity_holds",
    "registration_reveals_password",
    "tuple_hash",
    "xor_digests",
]
