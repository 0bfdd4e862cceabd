"""Independent reference computations used to freeze expected test values.

Everything here deliberately avoids the library's own code paths: joint
distributions come from dense Kronecker projectors with eigenvectors taken
from numpy's eigendecomposition, reduced density matrices from explicit index
loops, and apportionments from a separate largest-remainder formulation.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def projector_distribution(psi, settings):
    """Joint outcome distribution via explicit 2^n x 2^n projectors.

    ``psi`` is a localworlds StateVector (canonical label order), ``settings``
    an ordered list of (label, hermitian_matrix).  Eigenvectors come from
    np.linalg.eigh, so no phase convention is shared with the library.
    """
    labels = psi.labels
    eig = {}
    for label, mat in settings:
        w, v = np.linalg.eigh(np.asarray(mat, dtype=complex))
        # eigh returns ascending eigenvalues: column 0 is -1, column 1 is +1
        eig[label] = {int(round(w[i])): np.outer(v[:, i], v[:, i].conj()) for i in range(2)}
    dist = {}
    for combo in itertools.product((+1, -1), repeat=len(settings)):
        full = np.array([[1.0 + 0j]])
        chosen = dict(zip((l for l, _ in settings), combo))
        for label in labels:
            block = eig[label][chosen[label]] if label in chosen else np.eye(2, dtype=complex)
            full = np.kron(full, block)
        dist[combo] = float(np.real(psi.amplitudes.conj() @ full @ psi.amplitudes))
    return dist


def expectation_from_distribution(dist):
    total = 0.0
    for combo, p in dist.items():
        sign = 1
        for v in combo:
            sign *= v
        total += sign * p
    return total


def loop_partial_trace(psi, keep):
    """Reduced density matrix by explicit index summation."""
    labels = list(psi.labels)
    keep = sorted(keep)
    n = len(labels)
    keep_pos = [labels.index(l) for l in keep]
    trace_pos = [i for i in range(n) if i not in keep_pos]
    k = len(keep)
    rho = np.zeros((2 ** k, 2 ** k), dtype=complex)
    amps = psi.amplitudes
    for i in range(2 ** n):
        bits_i = [(i >> (n - 1 - ax)) & 1 for ax in range(n)]
        for j in range(2 ** n):
            bits_j = [(j >> (n - 1 - ax)) & 1 for ax in range(n)]
            if any(bits_i[ax] != bits_j[ax] for ax in trace_pos):
                continue
            row = sum(bits_i[ax] << (k - 1 - m) for m, ax in enumerate(keep_pos))
            col = sum(bits_j[ax] << (k - 1 - m) for m, ax in enumerate(keep_pos))
            rho[row, col] += amps[i] * np.conj(amps[j])
    return rho


def hamilton_largest_remainder(total, probs):
    """Largest-remainder apportionment written the classic sorted-list way."""
    quotas = [total * p for p in probs]
    counts = [math.floor(q) for q in quotas]
    leftover = total - sum(counts)
    by_frac = sorted(range(len(probs)), key=lambda i: (-(quotas[i] - counts[i]), i))
    for i in by_frac[:leftover]:
        counts[i] += 1
    return counts


def cascade_time_recurrence(t1, v, d, steps):
    """Times of object 1's branch events for line1 at rest and line2 = d + v t."""
    times = [t1]
    while len(times) < steps:
        times.append((1 - v * v) * times[-1] - v * d)
    return times
