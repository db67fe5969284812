"""Sampled-waveform container shared by the whole DSP chain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled waveform with its sample rate.

    Samples are stored as complex128. A signal flagged ``real_valued``
    carries exactly zero imaginary part. Instances are treated as
    immutable; operations return new signals, so values are safe to
    share across worker processes.
    """

    samples: np.ndarray
    sample_rate: float
    real_valued: bool = False

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128)
        object.__setattr__(self, "samples", samples)
        if not self.sample_rate > 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("samples must be a non-empty 1-D array")
        if self.real_valued and np.any(samples.imag != 0.0):
            raise ValueError("signal flagged real-valued carries nonzero imaginary part")

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate

    def power(self) -> float:
        """Mean per-sample power ``mean(|x|^2)``."""
        return float(np.mean(np.abs(self.samples) ** 2))

    def total_energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2))


def real_signal(samples, sample_rate: float) -> SampledSignal:
    """Wrap a real array as a real-valued :class:`SampledSignal`."""
    arr = np.asarray(samples, dtype=np.float64)
    return SampledSignal(arr.astype(np.complex128), sample_rate, real_valued=True)


def complex_signal(samples, sample_rate: float) -> SampledSignal:
    return SampledSignal(np.asarray(samples, dtype=np.complex128), sample_rate)
