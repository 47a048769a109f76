"""Quantum dialogue protocol simulator."""

from ._core import (
    ConfigError,
    apply_pauli,
    bell_probabilities,
    bell_state,
    cm_check,
    compose,
    decode_bits,
    exact_oracle,
    run_dialogue,
    run_sessions,
)

__all__ = [
    "ConfigError",
    "apply_pauli",
    "bell_probabilities",
    "bell_state",
    "cm_check",
    "compose",
    "decode_bits",
    "exact_oracle",
    "run_dialogue",
    "run_sessions",
]
