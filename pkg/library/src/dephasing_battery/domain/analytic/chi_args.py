from dataclasses import dataclass


@dataclass(frozen=True)
class ChiArgs:
    gamma_c: float
    g: float
    f: float

    @property
    def discriminant(self) -> float:
        return self.gamma_c ** 2 - 32 * self.f * self.g ** 2
