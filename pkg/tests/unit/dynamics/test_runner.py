"""Tests for simulation jobs and their summaries."""

from pathlib import Path

import pytest

from pga_kit.dynamics import (
    BodyFileError,
    SimulationJob,
    SimulationSummary,
    run_simulation,
    run_simulations,
)

from ...fixtures.factories import ELLIPSOID_MASSES, make_body_file


class TestRunSimulation:
    def test_spinning_cube_summary(self, cube_file):
        job = SimulationJob(body=cube_file, dt=0.01, steps=20, omega=(0.0, 0.0, 1.0))
        summary = run_simulation(job)
        assert summary.steps == 20
        assert summary.final_time == pytest.approx(0.2)
        assert summary.initial_energy == pytest.approx(8.0)
        assert summary.final_energy == pytest.approx(8.0)
        assert summary.energy_drift_rel < 1e-10
        assert summary.work == 0.0
        assert summary.out is None

    def test_writes_trajectory(self, cube_file, tmp_path):
        out = tmp_path / "cube.csv"
        summary = run_simulation(SimulationJob(body=cube_file, dt=0.01, steps=5, out=out))
        assert summary.out == out
        assert len(out.read_text().splitlines()) == 1 + 6

    def test_force_does_work(self, body_file):
        job = SimulationJob(
            body=body_file,
            dt=0.01,
            steps=50,
            omega=(1.0, 0.0, 0.0),
            force=(0.5, 0.0, 0.0, 0.0, 0.0, 0.0),
        )
        summary = run_simulation(job)
        assert summary.work == pytest.approx(
            summary.final_energy - summary.initial_energy, rel=1e-4
        )

    def test_bad_body_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 2 3\n")
        with pytest.raises(BodyFileError):
            run_simulation(SimulationJob(body=path, dt=0.01, steps=1))


class TestSummaryLine:
    """Tests for the one-line report."""

    def test_line_fields(self):
        summary = SimulationSummary(
            body=Path("cube.txt"),
            steps=10,
            final_time=0.1,
            initial_energy=8.0,
            final_energy=8.0,
            energy_drift_rel=1.5e-12,
            momentum_drift=0.0,
            work=0.0,
        )
        line = summary.line()
        assert line.startswith("cube.txt: steps=10 t=0.1 energy=8")
        assert "energy_drift_rel=1.500e-12" in line
        assert "work=" not in line
        assert "->" not in line

    def test_line_with_work_and_output(self):
        summary = SimulationSummary(
            body=Path("a.txt"),
            steps=1,
            final_time=0.5,
            initial_energy=1.0,
            final_energy=2.0,
            energy_drift_rel=1.0,
            momentum_drift=0.1,
            work=1.0,
            out=Path("a.csv"),
        )
        assert summary.line().endswith("work=1 -> a.csv")


class TestRunSimulations:
    def test_single_job_runs_inline(self, cube_file):
        summaries = run_simulations([SimulationJob(body=cube_file, dt=0.01, steps=3)])
        assert len(summaries) == 1

    def test_results_keep_input_order(self, cube_file, tmp_path):
        other = make_body_file(tmp_path / "ellipsoid.txt", ELLIPSOID_MASSES)
        jobs = [
            SimulationJob(body=cube_file, dt=0.01, steps=3, omega=(0.0, 0.0, 1.0)),
            SimulationJob(body=other, dt=0.01, steps=3, omega=(0.0, 0.0, 1.0)),
        ]
        summaries = run_simulations(jobs, max_workers=2)
        assert [s.body for s in summaries] == [cube_file, other]
        assert summaries[0].initial_energy == pytest.approx(8.0)
        assert summaries[1].initial_energy == pytest.approx(5.0)

    def test_no_jobs(self):
        assert run_simulations([]) == []
