from chainsched import ChainClass, ExperimentSpec, GeneratorConfig, run_experiment
from chainsched.report import (render_makespan_by_instance, render_ratio_summary,
                               render_report)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _result():
    spec = ExperimentSpec(
        generator=GeneratorConfig(
            seed=0, num_chains=3, processors=8,
            chain_class=ChainClass.ARBITRARY, min_len=1, max_len=4,
            min_req=1, max_req=8, splitable=False),
        algorithms=("lcf", "lcmcf", "mcf"), repetitions=8, seed_base=50)
    return run_experiment(spec)


def test_render_report_writes_both_figures(tmp_path):
    paths = render_report(_result(), tmp_path / "figs")
    assert [p.name for p in paths] == ["ratio_summary.png",
                                       "makespan_by_instance.png"]
    for p in paths:
        assert p.read_bytes()[:8] == PNG_MAGIC
        assert p.stat().st_size > 1000


def test_figures_are_byte_stable(tmp_path):
    result = _result()
    for render in (render_ratio_summary, render_makespan_by_instance):
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        render(result, a)
        render(result, b)
        assert a.read_bytes() == b.read_bytes()
