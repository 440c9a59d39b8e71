"""Closed-form amplitude oracles for the figure-eight family with unit loops."""
import math

import numpy as np


def odd_n_amplitudes(theta):
    h = 0.5 * np.asarray(theta)
    return np.cos(h) - np.sin(h), -np.cos(h) - np.sin(h)


def even_n_amplitudes(theta):
    h = 0.5 * np.asarray(theta)
    return np.cos(h) + np.sin(h), np.cos(h) - np.sin(h)


def ground_amplitudes(theta):
    a1, a2 = even_n_amplitudes(theta)
    return a1 / math.sqrt(2.0), a2 / math.sqrt(2.0)


def gauge_fixed_error(table, oracle):
    """Sup error after choosing the global sign that matches the oracle at theta = 0."""
    b1, b2 = oracle(table.theta)
    sign = math.copysign(1.0, table.a1[0] * b1[0] + table.a2[0] * b2[0])
    return max(np.abs(sign * table.a1 - b1).max(), np.abs(sign * table.a2 - b2).max())
