"""Lattice Chern numbers from U-link plaquette products.

Each plaquette contributes the principal argument of the product of the four
normalized overlaps around (r, n) -> (r+1, n) -> (r+1, n+1) -> (r, n+1).
The sum over the zone divided by 2 pi is an integer whenever the links are
well conditioned, independent of the gauge of the states.
"""

import logging
import math
from dataclasses import asdict
from dataclasses import dataclass
from functools import partial

import numpy as np
from scipy.stats import unitary_group

from apps.bhz.hamiltonians import energy_gap
from apps.bhz.params import Momentum

from .exceptions import IllConditionedLinkError
from .spin import DEFAULT_GAP_FLOOR
from .spin import PSEUDOSPIN_Z
from .spin import spin_split

logger = logging.getLogger(__name__)

LINK_FLOOR = 1e-8
REFINEMENT_ADVICE = "refine the grid so that neighbouring states overlap"


@dataclass(frozen=True)
class InvariantRecord:
    C_plus: float
    C_minus: float
    C_s: float
    delta_s: float
    delta_cv: float
    grid_R: int
    grid_N: int

    def as_dict(self):
        return asdict(self)


def _principal(phase):
    """Move -pi onto pi so angles live in (-pi, pi]."""
    return math.pi if phase <= -math.pi else phase


def ulink_field_strength(corners):
    """Lattice field strength of one plaquette from its four corner states."""
    states = [np.asarray(state, dtype=np.complex128) for state in corners]
    product = 1.0 + 0.0j
    for index, state in enumerate(states):
        overlap = np.vdot(state, states[(index + 1) % len(states)])
        modulus = abs(overlap)
        if modulus < LINK_FLOOR:
            msg = "Link overlap vanished on a plaquette"
            raise IllConditionedLinkError(
                msg, link=index, modulus=modulus, advice=REFINEMENT_ADVICE
            )
        product *= overlap / modulus
    return _principal(float(np.angle(product)))


def field_strength_map(states):
    """Field strength of every plaquette for states sampled on an R x N grid.

    ``states`` has shape (R, N, 4); entry (r, n) of the result belongs to the
    plaquette whose lower-left corner is grid point (r, n).
    """
    states = np.asarray(states, dtype=np.complex128)
    next_x = np.roll(states, -1, axis=0)
    next_y = np.roll(states, -1, axis=1)
    link_x = np.einsum("rni,rni->rn", states.conj(), next_x)
    link_y = np.einsum("rni,rni->rn", states.conj(), next_y)

    smallest = min(float(np.min(np.abs(link_x))), float(np.min(np.abs(link_y))))
    if smallest < LINK_FLOOR:
        moduli = np.minimum(np.abs(link_x), np.abs(link_y))
        r, n = np.unravel_index(int(np.argmin(moduli)), moduli.shape)
        msg = "Link overlap vanished on the grid"
        raise IllConditionedLinkError(
            msg, at=(int(r), int(n)), modulus=smallest, advice=REFINEMENT_ADVICE
        )

    link_x = link_x / np.abs(link_x)
    link_y = link_y / np.abs(link_y)
    # Ux(r, n) Uy(r+1, n) Ux(r, n+1)^* Uy(r, n)^*
    loop = (
        link_x
        * np.roll(link_y, -1, axis=0)
        * np.roll(link_x, -1, axis=1).conj()
        * link_y.conj()
    )
    field = np.angle(loop)
    field[field <= -math.pi] = math.pi
    return field


def chern_number(field):
    """(1 / 2 pi) times the sum of a field strength map, in a fixed order."""
    return math.fsum(np.ravel(field)) / (2.0 * math.pi)


def _branch_row(item, *, params, ky_values, gap_floor, spin_operator):
    """Spin-split states along one kx row and the smallest splitting on it."""
    kx, seed_sequence = item
    rng = np.random.default_rng(seed_sequence) if seed_sequence is not None else None
    plus = np.empty((len(ky_values), 4), dtype=np.complex128)
    minus = np.empty_like(plus)
    smallest = math.inf
    for n, ky in enumerate(ky_values):
        mixer = unitary_group.rvs(2, random_state=rng) if rng is not None else None
        pair = spin_split(
            params,
            Momentum(kx, ky),
            gap_floor=gap_floor,
            spin_operator=spin_operator,
            mixer=mixer,
        )
        plus[n] = pair.psi_plus
        minus[n] = pair.psi_minus
        smallest = min(smallest, pair.splitting)
    return plus, minus, smallest


def branch_states(
    params,
    grid,
    *,
    gap_floor=DEFAULT_GAP_FLOOR,
    spin_operator=PSEUDOSPIN_Z,
    seed=None,
    mapper=map,
):
    """Spin-split states on the grid, with the smallest spin splitting met.

    With ``seed`` set, every grid point's occupied pair is premixed by an
    independent Haar-random U(2) before the spin split; each kx row draws from
    its own child seed, so the result does not depend on ``mapper``. Rows are
    handed to ``mapper(job, items)``, which may spread them over processes.
    """
    if seed is None:
        seeds = [None] * grid.R
    else:
        seeds = np.random.SeedSequence(seed).spawn(grid.R)
    job = partial(
        _branch_row,
        params=params,
        ky_values=grid.ky_values,
        gap_floor=gap_floor,
        spin_operator=spin_operator,
    )
    rows = list(mapper(job, list(zip(grid.kx_values, seeds, strict=True))))
    plus = np.stack([row[0] for row in rows])
    minus = np.stack([row[1] for row in rows])
    return plus, minus, min(row[2] for row in rows)


def spin_chern(
    params,
    grid,
    *,
    gap_floor=DEFAULT_GAP_FLOOR,
    spin_operator=PSEUDOSPIN_Z,
    seed=None,
    mapper=map,
):
    """Chern numbers of both spin branches and the spin Chern number on ``grid``."""
    plus, minus, delta_s = branch_states(
        params,
        grid,
        gap_floor=gap_floor,
        spin_operator=spin_operator,
        seed=seed,
        mapper=mapper,
    )
    c_plus = chern_number(field_strength_map(plus))
    c_minus = chern_number(field_strength_map(minus))
    record = InvariantRecord(
        C_plus=c_plus,
        C_minus=c_minus,
        C_s=(c_plus - c_minus) / 2.0,
        delta_s=delta_s,
        delta_cv=energy_gap(params, grid).value,
        grid_R=grid.R,
        grid_N=grid.N,
    )
    logger.debug(
        "U-link M=%.4f g=%.4f on %dx%d: C+=%.6f C-=%.6f Cs=%.6f",
        params.M,
        params.g,
        grid.R,
        grid.N,
        record.C_plus,
        record.C_minus,
        record.C_s,
    )
    return record
