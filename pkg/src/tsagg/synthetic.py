"""Seeded synthetic hourly profiles for experiments and tests.

Three archetypes with very different aggregation behaviour: solar
irradiance (strong daily bell, zero at night, mild day-to-day amplitude
changes), wind feed-in (aperiodic but smooth hour-to-hour drift), and
electric load (double daily peak with weekly and seasonal modulation).
All return one value per hour, n_days * 24 entries.
"""

from __future__ import annotations

import numpy as np


def solar_profile(n_days: int = 365, seed: int = 0) -> np.ndarray:
    """Daytime bell between 06:00 and 18:00, zero nights."""
    rng = np.random.default_rng(seed)
    hours = np.arange(24)
    bell = np.cos((hours - 12.0) / 6.0 * np.pi / 2.0)
    bell = np.where(np.abs(hours - 12) < 6, bell**2, 0.0)
    days = np.arange(n_days)
    seasonal = 0.75 + 0.25 * np.sin(2.0 * np.pi * (days - 81) / 365.0)
    amplitude = np.clip(seasonal + 0.05 * rng.standard_normal(n_days), 0.05, 1.1)
    return (amplitude[:, None] * bell[None, :]).reshape(-1)


def wind_profile(n_days: int = 365, seed: int = 0) -> np.ndarray:
    """Mean-reverting random walk, smooth transitions, no daily pattern."""
    rng = np.random.default_rng(seed)
    n = n_days * 24
    x = np.empty(n)
    x[0] = 0.0
    steps = rng.standard_normal(n - 1)
    for t in range(1, n):
        x[t] = 0.98 * x[t - 1] + 0.35 * steps[t - 1]
    # squash onto (0, 1) like a capacity factor
    return 1.0 / (1.0 + np.exp(-0.8 * x))


def load_profile(n_days: int = 365, seed: int = 0) -> np.ndarray:
    """Morning and evening peaks, weekend dip, winter-heavy season, noise."""
    rng = np.random.default_rng(seed)
    hours = np.arange(24)
    shape = (0.55
             + 0.25 * np.exp(-0.2 * (hours - 8.0) ** 2)
             + 0.45 * np.exp(-0.15 * (hours - 19.0) ** 2))
    days = np.arange(n_days)
    seasonal = 1.0 + 0.25 * np.cos(2.0 * np.pi * days / 365.0)
    weekday = np.where(days % 7 >= 5, 0.85, 1.0)
    base = seasonal[:, None] * weekday[:, None] * shape[None, :]
    noise = 1.0 + rng.uniform(-0.35, 0.35, size=(n_days, 24))
    return (base * noise).reshape(-1)
