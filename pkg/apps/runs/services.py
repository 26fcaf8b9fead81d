"""Services behind the simulation commands.

Each ``run_*`` function computes its results, writes the CSV and JSON outputs
next to ``config.output_path`` and returns a ``RunResult``. Only the calling
process writes files; pool workers return plain values.
"""

import logging
import math
from dataclasses import asdict
from dataclasses import dataclass
from functools import partial

import numpy as np
from scipy.integrate import solve_ivp

from apps.bhz.hamiltonians import hamiltonian
from apps.bhz.microwaves import frame_unitary
from apps.bhz.microwaves import lab_frame_hamiltonian
from apps.bhz.microwaves import model_to_microwaves
from apps.bhz.microwaves import rotating_frame_hamiltonian
from apps.bhz.params import Momentum
from apps.dynamics.curvature import BRANCHES
from apps.dynamics.curvature import CurvatureMap
from apps.dynamics.curvature import berry_curvature_lr
from apps.dynamics.curvature import integrate_curvature
from apps.dynamics.evolution import bloch_expectations
from apps.dynamics.evolution import norm_squared
from apps.dynamics.evolution import prepare_initial_state
from apps.dynamics.evolution import project_pseudospin
from apps.dynamics.evolution import propagate
from apps.dynamics.exceptions import InitialStatePreparationError
from apps.dynamics.exceptions import IntegratorError
from apps.dynamics.protocols import SweepProtocol
from apps.invariants.exceptions import EnergyGapClosedError
from apps.invariants.exceptions import SpinGapClosedError
from apps.invariants.ulink import spin_chern
from apps.linalg.dense import unitary_exp
from apps.tomography.pipeline import frame_angle
from apps.tomography.pipeline import frame_rotation
from apps.tomography.pipeline import population_convention
from apps.tomography.pipeline import reconstruct_bloch
from apps.tomography.pipeline import to_atomic_frame
from apps.utils.exceptions import SimulationError
from apps.utils.paths import sibling_path

from .choices import RecordStatus
from .choices import RunCommand
from .exceptions import FramesCheckFailedError
from .records import SWEEP_COLUMNS
from .records import SweepRecord
from .workers import run_ordered
from .writers import write_csv
from .writers import write_json

logger = logging.getLogger(__name__)

GAP_ERRORS = (EnergyGapClosedError, SpinGapClosedError, InitialStatePreparationError)

CURVATURE_COLUMNS = (
    "m_over_2b",
    "g_over_a",
    "omega_t_over_pi",
    "kx",
    "ky",
    "f_plus",
    "f_minus",
    "f_s",
)
TOMOGRAPHY_COLUMNS = (
    "t",
    "tau",
    "block_norm",
    "sx_direct",
    "sy_direct",
    "sz_direct",
    "sx_pipeline",
    "sy_pipeline",
    "sz_pipeline",
    "residual",
)
FRAMES_COLUMNS = ("t", "population_deviation", "state_deviation", "model_deviation")

FRAMES_TOLERANCE = 1e-6
ODE_OPTIONS = {"method": "DOP853", "rtol": 1e-10, "atol": 1e-12}


@dataclass(frozen=True)
class RunResult:
    command: str
    paths: tuple
    summary: dict

    @property
    def message(self):
        written = ", ".join(str(path) for path in self.paths)
        return f"{self.command} finished, wrote {written}"


def _summary_path(config):
    return sibling_path(config.output_path, ".json")


def _ulink_job(params, *, grid, gap_floor, seed, mapper=map):
    try:
        return spin_chern(params, grid, gap_floor=gap_floor, seed=seed, mapper=mapper)
    except (EnergyGapClosedError, SpinGapClosedError) as exc:
        logger.warning("Gap closed at M=%.6g g=%.6g: %s", params.M, params.g, exc)
        return None


def ulink_invariants(config, points):
    """U-link record (or None for a closed gap) per (m_over_2b, g_over_a)."""
    pairs = sorted({(point.m_over_2b, point.g_over_a) for point in points})
    params = [config.params_at(*pair) for pair in pairs]
    job = partial(
        _ulink_job,
        grid=config.grid.to_grid(),
        gap_floor=config.gap_floor,
        seed=config.seed,
    )
    if len(params) == 1 and config.workers > 1:
        # a single point spreads its grid rows over the workers instead
        rows = partial(run_ordered, workers=config.workers)
        return {pairs[0]: job(params[0], mapper=rows)}
    return dict(zip(pairs, run_ordered(job, params, config.workers), strict=True))


def _ulink_values(record):
    if record is None:
        return {"status": RecordStatus.GAP_CLOSED}
    return {
        "cs_ulink": record.C_s,
        "c_plus": record.C_plus,
        "c_minus": record.C_minus,
        "delta_s": record.delta_s,
        "delta_cv": record.delta_cv,
    }


def _lr_job(item, *, mode, gap_floor, smoothing_window):
    params, protocol = item
    try:
        return berry_curvature_lr(
            params,
            protocol,
            mode,
            gap_floor=gap_floor,
            smoothing_window=smoothing_window,
        )
    except GAP_ERRORS as exc:
        logger.warning(
            "Gap closed at M=%.6g g=%.6g ky=%.4f: %s",
            params.M,
            params.g,
            protocol.ky,
            exc,
        )
        return None
    except SimulationError as exc:
        exc.payload.update(M=params.M, g=params.g, ky=protocol.ky)
        raise


def curvature_maps(config, points):
    """Curvature map (or None when a gap closed on any line) per sweep point."""
    jobs = []
    for point in points:
        params = config.params_at(point.m_over_2b, point.g_over_a)
        protocols = config.protocol.protocols(config.model.A, point.omega_t_over_pi)
        jobs.extend((params, protocol) for protocol in protocols)
    job = partial(
        _lr_job,
        mode=config.reference_mode,
        gap_floor=config.gap_floor,
        smoothing_window=config.protocol.smoothing_window,
    )
    lines = run_ordered(job, jobs, config.workers)

    count = config.protocol.ky_lines
    maps = []
    for index, point in enumerate(points):
        chunk = lines[index * count : (index + 1) * count]
        if any(line is None for line in chunk):
            maps.append(None)
            continue
        maps.append(
            CurvatureMap(
                lines=tuple(chunk),
                omega_t_over_pi=point.omega_t_over_pi,
                reference_mode=config.reference_mode,
            )
        )
    return maps


def _curvature_rows(point, curvature):
    for sample in curvature.samples():
        yield (*point.key, *sample)


def _initial_states(point, curvature):
    for line in curvature.lines:
        if line.initial_parameters is not None:
            yield {
                "m_over_2b": point.m_over_2b,
                "g_over_a": point.g_over_a,
                "omega_t_over_pi": point.omega_t_over_pi,
                "ky": line.ky,
                **asdict(line.initial_parameters),
            }


def run_sweep(config, command=RunCommand.SWEEP):
    """U-link and/or linear-response invariants at every sweep point."""
    points = config.sweep_points()
    with_ulink = command in (RunCommand.ULINK, RunCommand.SWEEP)
    with_lr = command in (RunCommand.LR, RunCommand.SWEEP)
    logger.info("Running %s over %d sweep points", command, len(points))

    invariants = ulink_invariants(config, points) if with_ulink else {}
    maps = curvature_maps(config, points) if with_lr else [None] * len(points)

    records, curvature_rows, initial_states = [], [], []
    for point, curvature in zip(points, maps, strict=True):
        values = {}
        if with_ulink:
            values.update(_ulink_values(invariants[point.m_over_2b, point.g_over_a]))
        if with_lr:
            if curvature is None:
                values["status"] = RecordStatus.GAP_CLOSED
            else:
                values["cs_lr"] = integrate_curvature(curvature).C_s
                curvature_rows.extend(_curvature_rows(point, curvature))
                initial_states.extend(_initial_states(point, curvature))
        records.append(SweepRecord.for_point(point, **values))

    rows = [record.as_dict() for record in records]
    paths = [write_csv(rows, config.output_path, SWEEP_COLUMNS)]
    if with_lr:
        curvature_path = sibling_path(config.output_path, ".curvature.csv")
        paths.append(write_csv(curvature_rows, curvature_path, CURVATURE_COLUMNS))
    summary = {
        "command": RunCommand(command).value,
        "config": config.as_dict(),
        "records": [record.as_dict() for record in records],
    }
    if with_lr:
        summary["initial_states"] = initial_states
    paths.append(write_json(summary, _summary_path(config)))
    return RunResult(RunCommand(command).value, tuple(paths), summary)


def run_ulink(config):
    return run_sweep(config, RunCommand.ULINK)


def run_lr(config):
    return run_sweep(config, RunCommand.LR)


def tomography_rows(params, protocol, gap_floor):
    """Direct and reconstructed Bloch triples per snapshot and pseudospin.

    Direct columns are the unnormalized block expectations. The residual
    compares the pipeline output with them after the 2 P_E - 1 convention.
    """
    psi0 = prepare_initial_state(params, protocol.ky, gap_floor=gap_floor)
    for snapshot in propagate(params, protocol, psi0):
        phi0 = frame_angle(params, protocol, snapshot.t)
        triples = reconstruct_bloch(to_atomic_frame(snapshot.psi, phi0))
        for tau in BRANCHES:
            eta = project_pseudospin(snapshot.psi, tau)
            weight = norm_squared(eta)
            direct = bloch_expectations(eta)
            pipeline = frame_rotation(triples[tau], phi0)
            expected = population_convention(direct, weight)
            residual = max(abs(a - b) for a, b in zip(pipeline, expected, strict=True))
            yield (snapshot.t, tau, math.sqrt(weight), *direct, *pipeline, residual)


def run_tomography(config):
    params = config.model.to_params()
    # frame angles accumulate from t = 0, so this ramp starts without a lead-in
    protocol = SweepProtocol.from_drive(
        config.tomography.ky,
        config.protocol.omega_t_over_pi,
        A=params.A,
        steps=config.protocol.steps,
        meas_count=config.protocol.meas_count,
        scheme=config.protocol.scheme,
    )
    rows = list(tomography_rows(params, protocol, config.gap_floor))
    max_residual = max(row[-1] for row in rows)
    logger.info("Tomography at ky=%.4f: max residual %.3e", protocol.ky, max_residual)

    footer = f"max_residual={max_residual:.17g}"
    paths = [write_csv(rows, config.output_path, TOMOGRAPHY_COLUMNS, footer=footer)]
    summary = {
        "command": RunCommand.TOMOGRAPHY.value,
        "config": config.as_dict(),
        "ky": protocol.ky,
        "max_residual": max_residual,
    }
    paths.append(write_json(summary, _summary_path(config)))
    return RunResult(RunCommand.TOMOGRAPHY.value, tuple(paths), summary)


def phase_free_distance(first, second):
    """min over theta of |first - exp(i theta) second|."""
    overlap = abs(np.vdot(first, second))
    squared = norm_squared(first) + norm_squared(second) - 2.0 * overlap
    return math.sqrt(max(squared, 0.0))


def frames_rows(params, frames):
    """Compare lab-frame evolution, mapped into the tone frame, with the frame model.

    The model deviation compares the frame evolution for time t with the BHZ
    evolution for time t / 2, since the frame Hamiltonian is half of H(k).
    """
    k = Momentum(frames.kx, frames.ky)
    mw = model_to_microwaves(params, k, frames.synthetic_carrier_scale)
    if frames.closure_offset:
        mw = mw.with_detuning_offset(3, frames.closure_offset)
    rotating = rotating_frame_hamiltonian(mw)
    model = hamiltonian(params, k)

    psi0 = np.zeros(4, dtype=np.complex128)
    psi0[[0, 3]] = 1.0
    times = np.linspace(0.0, frames.duration, frames.samples + 1)[1:]
    solution = solve_ivp(
        lambda t, y: -1j * (lab_frame_hamiltonian(mw, t) @ y),
        (0.0, frames.duration),
        psi0,
        t_eval=times,
        **ODE_OPTIONS,
    )
    if not solution.success:
        msg = "Lab-frame integration failed"
        raise IntegratorError(msg, reason=solution.message)

    for t, lab in zip(times, solution.y.T, strict=True):
        in_frame = frame_unitary(mw, t).conj().T @ lab
        reference = unitary_exp(rotating, t) @ psi0
        halved = unitary_exp(model, 0.5 * t) @ psi0
        populations = np.abs(in_frame) ** 2 - np.abs(reference) ** 2
        population = float(np.max(np.abs(populations)))
        yield (
            float(t),
            population,
            phase_free_distance(in_frame, reference),
            phase_free_distance(reference, halved),
        )


def run_frames_check(config):
    params = config.model.to_params()
    rows = list(frames_rows(params, config.frames))
    report = {
        "max_population_deviation": max(row[1] for row in rows),
        "max_state_deviation": max(row[2] for row in rows),
        "max_model_deviation": max(row[3] for row in rows),
    }
    passed = report["max_population_deviation"] < FRAMES_TOLERANCE
    logger.info("Frames check %s: %s", "passed" if passed else "failed", report)

    paths = [write_csv(rows, config.output_path, FRAMES_COLUMNS)]
    summary = {
        "command": RunCommand.FRAMES_CHECK.value,
        "config": config.as_dict(),
        "passed": passed,
        "tolerance": FRAMES_TOLERANCE,
        **report,
    }
    paths.append(write_json(summary, _summary_path(config)))
    if not passed:
        msg = "Lab-frame and rotating-frame evolutions disagree"
        raise FramesCheckFailedError(msg, **report)
    return RunResult(RunCommand.FRAMES_CHECK.value, tuple(paths), summary)
