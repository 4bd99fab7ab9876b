# src/hecke_spectra/spectral/ledger.py
"""
The convention ledger: every normalization choice that changes spectral values by a rational
constant or a v-power, in one immutable record carried by each HeckeSpec.
"""
from dataclasses import dataclass

Q_W0_CHOICES = ("longest", "poincare")


@dataclass(frozen=True)
class ConventionLedger:
    # "longest": q(w_0) = v^{sum over positive roots of (k_plus + k_minus)}
    # "poincare": q(w_0) = the Poincare sum over W_0
    q_w0: str = "longest"
    signed_residues: bool = True
    gamma_epsilon: str = "dropped"
    grading_sign: str = "alpha(r) = e^{2 pi i s(alpha)} v^{<alpha, h>}"
    coset_constant: str = "omitted"

    def __post_init__(self):
        if self.q_w0 not in Q_W0_CHOICES:
            raise ValueError(f"Unknown q(w_0) convention {self.q_w0!r}; expected one of {Q_W0_CHOICES}.")

    def to_dict(self) -> dict:
        return {
            "q_w0": self.q_w0,
            "signed_residues": self.signed_residues,
            "gamma_epsilon": self.gamma_epsilon,
            "grading_sign": self.grading_sign,
            "coset_constant": self.coset_constant,
            "pole_rule": "alpha(r) = v^{k_plus} or alpha(r) = -v^{k_minus}",
            "mass_divisor": "omega_order",
        }


DEFAULT_LEDGER = ConventionLedger()
