"""Command-line interface: exit codes, artifacts, determinism."""

from __future__ import annotations

import json

import pytest

from regsep.cli import (
    EXIT_INPUT_ERROR,
    EXIT_NOT_DISJOINT,
    EXIT_OK,
    EXIT_PROPERTY_FAILED,
    main,
)
from regsep.fileio import load_automaton, save_net
from regsep.generators import random_net_pair
from regsep.petri import LabeledPetriNet, Transition

from .conftest import make_worked_pair


@pytest.fixture()
def worked_files(tmp_path):
    n1, n2 = make_worked_pair()
    p1, p2 = tmp_path / "n1.net", tmp_path / "n2.net"
    save_net(n1, str(p1))
    save_net(n2, str(p2))
    return str(p1), str(p2)


class TestCover:
    def test_not_coverable(self, tmp_path, capsys):
        net = LabeledPetriNet(
            places=("p",),
            alphabet=("a",),
            transitions=(Transition("t", "a", (1,), (0,)),),
            initial=(0,),
            final=(2,),
        )
        path = tmp_path / "n.net"
        save_net(net, str(path))
        assert main(["cover", str(path)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "NOT COVERABLE" in out
        assert "basis" in out

    def test_coverable(self, tmp_path, capsys):
        net = LabeledPetriNet(
            places=("p",),
            alphabet=("a",),
            transitions=(Transition("t", "a", (0,), (1,)),),
            initial=(0,),
            final=(1,),
        )
        path = tmp_path / "c.net"
        save_net(net, str(path))
        assert main(["cover", str(path)]) == EXIT_PROPERTY_FAILED
        assert "COVERABLE" in capsys.readouterr().out

    def test_missing_file(self, tmp_path):
        assert main(["cover", str(tmp_path / "nope.net")]) == EXIT_INPUT_ERROR

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.net"
        path.write_text('{"places": ["p"], "bogus": 1}')
        assert main(["cover", str(path)]) == EXIT_INPUT_ERROR


class TestDisjoint:
    def test_disjoint_pair(self, worked_files, capsys):
        p1, p2 = worked_files
        assert main(["disjoint", p1, p2]) == EXIT_OK
        assert "DISJOINT" in capsys.readouterr().out

    def test_overlapping_pair(self, worked_files, capsys):
        p1, _ = worked_files
        assert main(["disjoint", p1, p1]) == EXIT_PROPERTY_FAILED
        assert "NOT DISJOINT" in capsys.readouterr().out


class TestInvariant:
    def test_report(self, worked_files, capsys):
        p1, p2 = worked_files
        assert main(["invariant", p1, p2]) == EXIT_OK
        out = capsys.readouterr().out
        assert "ideal" in out and "ok" in out

    def test_coverable_product(self, worked_files):
        p1, _ = worked_files
        assert main(["invariant", p1, p1]) == EXIT_PROPERTY_FAILED


class TestSeparate:
    def test_artifacts_and_verify(self, worked_files, tmp_path, capsys):
        p1, p2 = worked_files
        out = tmp_path / "out"
        code = main(["separate", p1, p2, "-o", str(out), "--verify"])
        assert code == EXIT_OK
        assert "verified" in capsys.readouterr().out
        for name in ("core.aut", "complement.aut", "separator.aut"):
            load_automaton(str(out / name))  # parses back
        prov = json.loads((out / "provenance.json").read_text())
        assert prov["ideal_count"] == 3
        assert sorted(map(tuple, prov["basis"])) == [[0, 3], [1, 2], [2, 1]] or sorted(
            tuple(v) for v in prov["basis"]
        ) == [(0, 3), (1, 2), (2, 1)]

    def test_self_overlap_exits_3(self, tmp_path):
        net = LabeledPetriNet(
            places=("p",),
            alphabet=("a",),
            transitions=(Transition("t", "a", (0,), (1,)),),
            initial=(0,),
            final=(1,),
        )
        path = tmp_path / "n.net"
        save_net(net, str(path))
        code = main(["separate", str(path), str(path), "-o", str(tmp_path / "o")])
        assert code == EXIT_NOT_DISJOINT

    def test_rerun_byte_identical(self, worked_files, tmp_path):
        p1, p2 = worked_files
        out1, out2 = tmp_path / "o1", tmp_path / "o2"
        assert main(["separate", p1, p2, "-o", str(out1)]) == EXIT_OK
        assert main(["separate", p1, p2, "-o", str(out2)]) == EXIT_OK
        for name in ("core.aut", "complement.aut", "separator.aut", "provenance.json"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    def test_contain_first_swaps_orientation(self, worked_files, tmp_path):
        p1, p2 = worked_files
        out = tmp_path / "o"
        code = main(
            ["separate", p2, p1, "-o", str(out), "--contain", "first", "--verify"]
        )
        assert code == EXIT_OK

    def test_dot_export(self, worked_files, tmp_path):
        p1, p2 = worked_files
        out = tmp_path / "o"
        assert (
            main(["separate", p1, p2, "-o", str(out), "--format", "dot"]) == EXIT_OK
        )
        assert (out / "separator.aut.dot").read_text().startswith("digraph")

    def test_t2_level_verify(self, worked_files, tmp_path):
        p1, p2 = worked_files
        out = tmp_path / "o"
        code = main(
            ["separate", p1, p2, "-o", str(out), "--level", "t2", "--verify"]
        )
        assert code == EXIT_OK

    def test_t2_level_verify_with_unused_letters(self, tmp_path):
        # the second net declares a letter its transitions never carry; the
        # inner-level check must still line up the alphabets
        pair = random_net_pair(9)
        assert pair.disjoint
        assert set(pair.n2.alphabet) - {t.label for t in pair.n2.transitions}
        p1, p2 = tmp_path / "n1.net", tmp_path / "n2.net"
        save_net(pair.n1, str(p1))
        save_net(pair.n2, str(p2))
        out = tmp_path / "o"
        code = main(
            ["separate", str(p1), str(p2), "-o", str(out), "--level", "t2", "--verify"]
        )
        assert code == EXIT_OK


class TestVerifyCommand:
    def test_good_separator(self, worked_files, tmp_path, capsys):
        p1, p2 = worked_files
        out = tmp_path / "o"
        main(["separate", p1, p2, "-o", str(out)])
        code = main(["verify", p1, p2, str(out / "separator.aut")])
        assert code == EXIT_OK
        assert "ok" in capsys.readouterr().out

    def test_bad_separator(self, worked_files, tmp_path, capsys):
        p1, p2 = worked_files
        aut = tmp_path / "univ.aut"
        aut.write_text(
            json.dumps(
                {
                    "states": ["u"],
                    "alphabet": ["a"],
                    "initial": ["u"],
                    "final": ["u"],
                    "transitions": [["u", "a", "u"]],
                }
            )
        )
        code = main(["verify", p1, p2, str(aut)])
        assert code == EXIT_PROPERTY_FAILED
        assert "witness" in capsys.readouterr().out


class TestSample:
    def test_enumerates_words(self, worked_files, capsys):
        p1, _ = worked_files
        assert main(["sample", p1, "--maxlen", "4"]) == EXIT_OK
        out = capsys.readouterr().out.strip().splitlines()
        assert out == ["a.a", "a.a.a", "a.a.a.a"]

    def test_cap_enforced(self, worked_files):
        p1, _ = worked_files
        assert main(["sample", p1, "--maxlen", "11"]) == EXIT_INPUT_ERROR

    def test_config_raises_cap(self, worked_files, tmp_path):
        p1, _ = worked_files
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"sample_maxlen_cap": 12}')
        assert (
            main(["--config", str(cfg), "sample", p1, "--maxlen", "11"]) == EXIT_OK
        )


class TestGenerators:
    def test_gen_lastletter(self, tmp_path):
        out = tmp_path / "ll.net"
        assert main(["gen-lastletter", "--bit", "1", "--k", "2", "-o", str(out)]) == EXIT_OK
        net = json.loads(out.read_text())
        assert net["alphabet"] == ["0", "1", "b", "c"]

    def test_gen_lastletter_out_of_range(self, tmp_path):
        out = tmp_path / "ll.net"
        assert (
            main(["gen-lastletter", "--bit", "1", "--k", "99", "-o", str(out)])
            == EXIT_INPUT_ERROR
        )

    def test_gen_random_matches_library(self, tmp_path, capsys):
        prefix = tmp_path / "pair"
        assert main(["gen-random", "--seed", "3", "-o", str(prefix)]) == EXIT_OK
        verdict = capsys.readouterr().out.strip()
        pair = random_net_pair(3)
        assert verdict == ("DISJOINT" if pair.disjoint else "NOT DISJOINT")
        from regsep.fileio import load_net

        assert load_net(f"{prefix}_1.net") == pair.n1
        assert load_net(f"{prefix}_2.net") == pair.n2
