"""JSON wire formats: {"n", "rows"} for probability tables, {"n", "real", "imag"} for density matrices."""
import numpy as np
from pydantic import BaseModel, model_validator

from .models import DensityMatrix, ProbabilityTable


class ProbabilityTablePayload(BaseModel):
    n: int
    rows: list[list[float]]

    @model_validator(mode='after')
    def _shape(self) -> "ProbabilityTablePayload":
        if len(self.rows) != self.n + 1 or any(len(row) != self.n for row in self.rows):
            raise ValueError(f"rows must be {self.n + 1} x {self.n}")
        return self


class DensityMatrixPayload(BaseModel):
    n: int
    real: list[list[float]]
    imag: list[list[float]]

    @model_validator(mode='after')
    def _shape(self) -> "DensityMatrixPayload":
        for part in (self.real, self.imag):
            if len(part) != self.n or any(len(row) != self.n for row in part):
                raise ValueError(f"real and imag must both be {self.n} x {self.n}")
        return self


def table_to_json(table: ProbabilityTable) -> str:
    return ProbabilityTablePayload(n=table.dimension, rows=table.rows.tolist()).model_dump_json()


def table_from_json(text: str) -> ProbabilityTable:
    payload = ProbabilityTablePayload.model_validate_json(text)
    return ProbabilityTable(np.array(payload.rows))


def density_to_json(rho: DensityMatrix) -> str:
    return DensityMatrixPayload(n=rho.dimension, real=rho.entries.real.tolist(),
                                imag=rho.entries.imag.tolist()).model_dump_json()


def density_from_json(text: str) -> DensityMatrix:
    payload = DensityMatrixPayload.model_validate_json(text)
    return DensityMatrix(np.array(payload.real) + 1j * np.array(payload.imag))
