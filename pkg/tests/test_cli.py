import json

import pytest

from scatfact import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_two_arch_word(capsys):
    code, out, _ = run(["analyze", "aabbbaa"], capsys)
    assert code == 0
    assert "factorization: (aab)(bba)a" in out
    assert "iota: 2" in out
    assert "modus: ba" in out
    assert "rest: a" in out


def test_analyze_paper_arches(capsys):
    code, out, _ = run(["analyze", "tomatoatm"], capsys)
    assert code == 0
    assert "factorization: (toma)(toatm)" in out
    assert "iota: 2" in out


def test_analyze_empty_word(capsys):
    code, out, _ = run(["analyze", ""], capsys)
    assert code == 0
    assert "iota: 0" in out
    assert "counts: 1" in out


def test_analyze_json_mode(capsys):
    code, out, _ = run(["analyze", "--json", "aabbbaa", "ab"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first["factorization"] == "(aab)(bba)a"
    assert first["iota"] == 2
    assert first["counts"][0] == "1"
    assert json.loads(lines[1])["word"] == "ab"


def test_analyze_alphabet_override_gives_iota_zero(capsys):
    code, out, _ = run(["analyze", "aaa", "--alphabet", "ab"], capsys)
    assert code == 0
    assert "iota: 0" in out
    assert "rest: aaa" in out


def test_analyze_requires_input(capsys):
    code, _, err = run(["analyze"], capsys)
    assert code == 2
    assert "no input words" in err


def test_global_flags_accepted_before_subcommand(capsys):
    code, out, _ = run(["--json", "count", "bab"], capsys)
    assert code == 0
    assert json.loads(out) == {"word": "bab", "counts": ["1", "2", "3", "1"]}


def test_count_plain(capsys):
    code, out, _ = run(["count", "bab"], capsys)
    assert code == 0
    assert out.strip() == "bab\t1 2 3 1"


def test_count_from_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("bab\naaba\n")
    code, out, _ = run(["count", "--file", str(path)], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("bab\t")
    assert lines[1].startswith("aaba\t")


def test_set_command(capsys):
    code, out, _ = run(["set", "aaba", "--k", "2"], capsys)
    assert code == 0
    assert out.split() == ["aa", "ab", "ba"]
    code, out, _ = run(["set", "aaba", "--k", "2", "--json"], capsys)
    assert json.loads(out) == {"word": "aaba", "k": 2, "factors": ["aa", "ab", "ba"]}


def test_set_guard_exit_code(capsys):
    code, _, err = run(["set", "ab", "--k", "1", "--guard", "1"], capsys)
    assert code == 2
    assert "guard" in err


def test_enumerate_command(capsys):
    code, out, _ = run(["enumerate", "aaba", "--k", "2"], capsys)
    assert code == 0
    assert out == "aa\nab\nba\n"
    code, out, _ = run(["enumerate", "aaba", "--k", "2", "--limit", "2"], capsys)
    assert out == "aa\nab\n"


def test_congruent_exit_codes(capsys):
    code, out, _ = run(["congruent", "aaba", "abaa", "--k", "2"], capsys)
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(["congruent", "aaba", "abaa", "--k", "3"], capsys)
    assert (code, out.strip()) == (1, "false")
    code, out, _ = run(["congruent", "aaba", "abaa", "--k", "2", "--json"], capsys)
    assert json.loads(out)["congruent"] is True


def test_congruent_uses_union_alphabet(capsys):
    # "b" vs "c": inferred alphabets differ per word, union makes them comparable
    code, out, _ = run(["congruent", "b", "c", "--k", "1"], capsys)
    assert (code, out.strip()) == (1, "false")


def test_construct_w_min(capsys):
    code, out, _ = run(["construct", "w-min", "--sigma", "4", "--iota", "5"], capsys)
    assert code == 0
    assert out.strip() == "abcddcbaabcddcbaabcd"
    code, out, _ = run(
        ["construct", "w-min", "--sigma", "2", "--iota", "3", "--json"], capsys
    )
    data = json.loads(out)
    assert data["word"] == "abbaab"
    assert data["iota"] == 3
    assert data["rest"] == ""


def test_construct_min_absent(capsys):
    code, out, _ = run(
        ["construct", "min-absent", "--sigma", "2", "--iota", "1", "--k", "2",
         "--modus-letter", "a"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "bab"


def test_construct_min_absent_all(capsys):
    code, out, _ = run(
        ["construct", "min-absent", "--sigma", "2", "--iota", "1", "--k", "2", "--all"],
        capsys,
    )
    assert code == 0
    assert set(out.split()) == {"aba", "bab"}


def test_construct_min_absent_requires_k(capsys):
    code, _, err = run(
        ["construct", "min-absent", "--sigma", "2", "--iota", "1"], capsys
    )
    assert code == 2
    assert "--k" in err


def test_bounds_values(capsys):
    code, out, _ = run(["bounds", "2", "1", "2"], capsys)
    assert code == 0
    assert "max_scatfact_count: 3" in out
    assert "min_absent_count: 1" in out
    assert "shortest_min_absent_length: 3" in out
    assert "count_shortest_min_absent_words: 2" in out
    code, out, _ = run(["bounds", "3", "1", "2", "--json"], capsys)
    data = json.loads(out)
    assert data["max_scatfact_count"] == "8"
    assert data["min_absent_count"] == "1"
    assert data["shortest_min_absent_length"] == 5
    assert data["count_shortest_min_absent_words"] == "12"


def test_bounds_rejects_bad_params(capsys):
    code, _, err = run(["bounds", "2", "3", "2"], capsys)
    assert code == 2
    assert "k must exceed iota" in err


def test_verify_always_absent_cli(capsys):
    code, out, _ = run(
        ["verify", "always-absent", "--sigma", "2", "--iota", "1", "--k", "2"], capsys
    )
    assert code == 0
    assert "status: PASS" in out


def test_verify_min_absent_json(warmed_backends, capsys):
    code, out, _ = run(
        ["verify", "min-absent", "--sigma", "2", "--iota", "1", "--k", "2", "--json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "PASS"
    assert data["witnesses"] == []
    assert data["claim_id"] == "min-absent-extremality"
    assert data["params"]["max_len"] == 5


def test_verify_requires_k_for_injection(capsys):
    code, _, err = run(["verify", "injection", "--sigma", "2", "--iota", "2"], capsys)
    assert code == 2
    assert "--k" in err


def test_parse_error_names_character_and_position(capsys):
    code, _, err = run(["analyze", "abxa", "--alphabet", "ab"], capsys)
    assert code == 2
    assert "'x'" in err
    assert "position 3" in err


def test_usage_errors_from_argparse(capsys):
    assert run(["nosuchcommand"], capsys)[0] == 2
    assert run(["set", "ab"], capsys)[0] == 2  # missing required --k
    assert run([], capsys)[0] == 2
    assert run(["--help"], capsys)[0] == 0
