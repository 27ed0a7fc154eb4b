"""Two-qubit quantum-memory dynamics in a detuned Lorentzian cavity."""

from ._qmem import (
    DecayEnvelope,
    concurrence,
    discord,
    discord_oracle,
    envelope,
    evolved_state,
    figure_csv,
    initial_state,
    mutual_information,
    selfcheck,
    sweep,
    uncertainty,
)

__all__ = [
    "DecayEnvelope",
    "concurrence",
    "discord",
    "discord_oracle",
    "envelope",
    "evolved_state",
    "figure_csv",
    "initial_state",
    "mutual_information",
    "selfcheck",
    "sweep",
    "uncertainty",
]
