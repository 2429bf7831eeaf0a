import json
from itertools import combinations, permutations
from math import factorial

import pytest

from fixchain.fixtures import complete, cycle, fixture, join, mycielski
from fixchain.graph import Graph, Graph6ParseError, to_graph6
from fixchain.harness import (
    CheckReport,
    Config,
    CorpusSpec,
    check_corollary1,
    check_grotzsch,
    check_lemma1,
    check_lemma2_lemma3,
    check_lemma4,
    check_lemma5,
    check_theorem1,
    corollary_experiment,
    generate_small_graphs,
)


def count_graph_classes(n: int) -> int:
    """Number of isomorphism classes of simple graphs on n labeled-then-
    quotiented vertices, by averaging fixed edge subsets over S_n."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for start in range(len(pairs)):
            if seen[start]:
                continue
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                a, b = pairs[j]
                ia, ib = perm[a], perm[b]
                j = index[(ia, ib) if ia < ib else (ib, ia)]
        total += 2 ** cycles
    return total // factorial(n)


class TestGeneration:
    def test_counts_match_orbit_counting(self):
        for n in range(1, 8):
            assert len(generate_small_graphs(n)) == count_graph_classes(n)

    def test_members_are_distinct_and_well_formed(self):
        graphs = generate_small_graphs(5)
        assert len({to_graph6(g) for g in graphs}) == len(graphs)
        assert all(g.n == 5 for g in graphs)

    def test_single_vertex(self):
        graphs = generate_small_graphs(1)
        assert len(graphs) == 1
        assert graphs[0].n == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            generate_small_graphs(0)
        with pytest.raises(ValueError):
            generate_small_graphs(11)


class TestCorpusSpec:
    def test_exactly_one_source_required(self):
        with pytest.raises(ValueError):
            CorpusSpec()
        with pytest.raises(ValueError):
            CorpusSpec(builtin_max=5, path="x.g6")

    def test_builtin_bounds(self):
        with pytest.raises(ValueError):
            CorpusSpec(builtin_max=0)
        with pytest.raises(ValueError):
            CorpusSpec(builtin_max=11)

    def test_filter_normalization(self):
        spec = CorpusSpec(builtin_max=4, filters=("Triangle-Free", " planar "))
        assert spec.filters == ("triangle_free", "planar")
        assert CorpusSpec(builtin_max=4, filters=("chromatic=3",)).chromatic_filter() == 3

    def test_bad_filters_rejected(self):
        for bad in ("chromatic=x", "chromatic=0", "bipartite", "chromatic="):
            with pytest.raises(ValueError):
                CorpusSpec(builtin_max=4, filters=(bad,))

    def test_describe(self):
        assert CorpusSpec(builtin_max=6).describe() == "builtin n<=6"
        spec = CorpusSpec(path="a.g6", filters=("planar", "chromatic=4"))
        assert spec.describe() == "file a.g6 | planar, chromatic=4"

    def test_builtin_lines(self):
        lines = CorpusSpec(builtin_max=3).graph6_lines()
        assert len(lines) == 1 + 2 + 4

    def test_file_lines(self, tmp_path):
        p = tmp_path / "corpus.g6"
        p.write_text("D~w\n\nC~\n")
        assert CorpusSpec(path=str(p)).graph6_lines() == ["D~w", "C~"]

    def test_malformed_file_rejected(self, tmp_path):
        p = tmp_path / "bad.g6"
        p.write_text("D~w\n!!notgraph6\n")
        with pytest.raises(Graph6ParseError):
            CorpusSpec(path=str(p)).graph6_lines()


class TestConfig:
    def test_defaults(self):
        cfg = Config()
        assert cfg.max_side == 4
        assert cfg.timeout_ms == 10_000
        assert cfg.format == "human"
        assert cfg.direction == "both"

    def test_validation(self):
        for kwargs in (
            {"palette": 0},
            {"max_side": 0},
            {"cycle_cap": 0},
            {"timeout_ms": 0},
            {"jobs": 0},
            {"format": "yaml"},
            {"direction": "sideways"},
        ):
            with pytest.raises(ValueError):
                Config(**kwargs)

    def test_jobs_env(self, monkeypatch):
        monkeypatch.setenv("FIXCHAIN_JOBS", "3")
        assert Config().effective_jobs() == 3
        assert Config(jobs=2).effective_jobs() == 2
        monkeypatch.setenv("FIXCHAIN_JOBS", "junk")
        with pytest.raises(ValueError):
            Config().effective_jobs()
        monkeypatch.delenv("FIXCHAIN_JOBS")
        assert Config().effective_jobs() == 1


class TestChecks:
    def test_theorem1_small_builtin_clean(self):
        corpus = CorpusSpec(builtin_max=5, filters=("planar", "chromatic=4"))
        report = check_theorem1(corpus)
        assert report.passed
        assert report.violations == []
        assert report.scanned > 0

    def test_required_filters_enforced(self):
        with pytest.raises(ValueError):
            check_theorem1(CorpusSpec(builtin_max=5))
        with pytest.raises(ValueError):
            check_lemma4(CorpusSpec(builtin_max=5, filters=("planar",)))
        with pytest.raises(ValueError):
            check_corollary1(CorpusSpec(builtin_max=5, filters=("chromatic=4",)))

    def test_extra_filters_never_widen_the_scan(self):
        base = check_theorem1(
            CorpusSpec(builtin_max=5, filters=("planar", "chromatic=4"))
        )
        narrowed = check_theorem1(
            CorpusSpec(builtin_max=5, filters=("planar", "connected", "chromatic=4"))
        )
        assert narrowed.scanned <= base.scanned

    def test_lemma4_directions(self):
        corpus = CorpusSpec(builtin_max=5, filters=("chromatic=4",))
        fwd = check_lemma4(corpus, direction="forward")
        assert fwd.passed and fwd.findings == []
        conv = check_lemma4(corpus, direction="converse")
        assert conv.passed
        with pytest.raises(ValueError):
            check_lemma4(corpus, direction="sideways")

    def test_lemma4_converse_deterministic_bytes(self):
        corpus = CorpusSpec(builtin_max=5, filters=("chromatic=4",))
        a = check_lemma4(corpus, direction="converse")
        b = check_lemma4(corpus, direction="converse")
        assert a.findings_json() == b.findings_json()
        assert a.body() == b.body()

    def test_lemma1_notes_report_the_operational_reading(self):
        corpus = CorpusSpec(builtin_max=4, filters=("chromatic=4",))
        report = check_lemma1(corpus)
        assert report.notes
        assert "proxy" in report.notes[0] or "reading" in report.notes[0]

    def test_lemma23_findings_are_recorded_not_fatal(self):
        corpus = CorpusSpec(builtin_max=5, filters=("chromatic=4",))
        report = check_lemma2_lemma3(corpus)
        assert report.passed
        for item in report.findings:
            assert "graph6" in item

    def test_lemma5_on_fig7(self, tmp_path):
        p = tmp_path / "fig7.g6"
        p.write_text(to_graph6(fixture("fig7")) + "\n")
        corpus = CorpusSpec(path=str(p), filters=("planar", "chromatic=4"))
        report = check_lemma5(corpus)
        assert report.scanned == 1
        assert report.passed
        # all three color-identical pairs of fig7 are non-joinable
        assert report.findings == []

    def test_fig1_file_corpus(self, tmp_path):
        p = tmp_path / "fig1.g6"
        p.write_text(to_graph6(fixture("fig1")) + "\n")
        report = check_theorem1(
            CorpusSpec(path=str(p), filters=("planar", "chromatic=4"))
        )
        assert report.scanned == 1
        assert report.passed

    def test_empty_file_corpus(self, tmp_path):
        p = tmp_path / "empty.g6"
        p.write_text("")
        report = check_theorem1(
            CorpusSpec(path=str(p), filters=("planar", "chromatic=4"))
        )
        assert report.scanned == 0
        assert report.passed

    def test_timeout_is_reported_not_raised(self, tmp_path):
        big = mycielski(mycielski(cycle(5)))
        p = tmp_path / "big.g6"
        g6 = to_graph6(big)
        p.write_text(g6 + "\n")
        corpus = CorpusSpec(path=str(p), filters=("chromatic=4",))
        report = check_lemma4(corpus, config=Config(timeout_ms=1))
        assert report.timeouts == [g6]
        assert report.scanned == 0
        assert report.passed

    def test_parallel_scan_matches_serial(self, tmp_path):
        corpus = CorpusSpec(builtin_max=5, filters=("chromatic=4",))
        serial = check_lemma4(corpus, config=Config(jobs=1))
        parallel = check_lemma4(corpus, config=Config(jobs=2))
        assert serial.body() == parallel.body()


class TestCorollaryExperiment:
    def test_needs_a_five_chromatic_graph(self):
        with pytest.raises(ValueError):
            corollary_experiment(complete(6))
        with pytest.raises(ValueError):
            corollary_experiment(complete(4))

    def test_k5_edge_deletions(self):
        doc = corollary_experiment(complete(5))
        assert doc["violations"] == []
        assert len(doc["edges"]) == 10
        for entry in doc["edges"]:
            assert entry["chromatic_after_delete"] == 4
            assert entry["endpoints_color_identical"] is True

    def test_check_wrapper(self, tmp_path):
        p = tmp_path / "k5.g6"
        p.write_text(to_graph6(complete(5)) + "\n")
        report = check_corollary1(CorpusSpec(path=str(p), filters=("chromatic=5",)))
        assert report.scanned == 1
        assert report.passed


class TestGrotzsch:
    def test_report(self):
        report = check_grotzsch()
        assert report.corpus == "fixture grotzsch"
        assert report.scanned == 1
        assert report.passed
        counts = {item["detail"]: item["count"] for item in report.findings}
        assert len(counts) == 2
        assert all(v == 0 for v in counts.values())


class TestReportRendering:
    @pytest.fixture()
    def report(self):
        return CheckReport(
            check="theorem1",
            corpus="builtin n<=4",
            scanned=3,
            violations=[],
            findings=[{"graph6": "C~", "detail": "example", "count": 1}],
            timeouts=["D~w"],
            elapsed_ms=12,
            version="0.1.0",
            notes=("a note",),
        )

    def test_structured_is_json(self, report):
        doc = json.loads(report.to_structured())
        assert doc["check"] == "theorem1"
        assert doc["scanned"] == 3
        assert doc["elapsed_ms"] == 12
        assert doc["notes"] == ["a note"]

    def test_body_excludes_timing(self, report):
        assert "elapsed_ms" not in report.body()

    def test_tabular_rows(self, report):
        rows = report.to_tabular().splitlines()
        assert rows[0].startswith("C~\ttheorem1\tfinding: example")
        assert rows[1] == "D~w\ttheorem1\ttimeout"

    def test_human_verdict(self, report):
        text = report.to_human()
        assert "result:     PASS" in text
        assert "note: a note" in text
        failing = CheckReport(
            check="x", corpus="y", scanned=1,
            violations=[{"graph6": "C~", "detail": "bad"}],
            findings=[], timeouts=[], elapsed_ms=1, version="0.1.0",
        )
        assert "result:     FAIL" in failing.to_human()
        assert not failing.passed

    def test_render_dispatch(self, report):
        assert report.render("human") == report.to_human()
        assert report.render("structured") == report.to_structured()
        assert report.render("tabular") == report.to_tabular()
