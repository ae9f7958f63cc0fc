import json

from schur_ed import cli
from schur_ed.covers import CoverElem


def run(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cover_verify_pass(capsys):
    code, out, _ = run(capsys, "cover", "verify", "-n", "5",
                       "--variant", "minus")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["order"] == 240
    assert all(r["ok"] for r in data["relations"])


def test_cover_verify_usage_error(capsys):
    code, _, err = run(capsys, "cover", "verify", "-n", "3")
    assert code == 2
    assert "4 <= n" in err


def test_cover_verify_fault_injection(capsys, monkeypatch):
    from schur_ed import covers

    real = covers.verify_presentation

    def faulty(spec, **kwargs):
        cov = covers.get_cover(spec)

        def bad_mul(g, h):
            out = cov.mul(g, h)
            if h.perm[0] != 1:
                out = CoverElem(out.eps ^ 1, out.perm)
            return out

        kwargs["mul_fn"] = bad_mul
        return real(spec, **kwargs)

    monkeypatch.setattr(cli, "verify_presentation", faulty)
    code, out, _ = run(capsys, "cover", "verify", "-n", "4")
    assert code == 1
    data = json.loads(out)
    failing = [r["relation"] for r in data["relations"] if not r["ok"]]
    assert failing


def test_table1_tsv_byte_exact(capsys):
    code, out, _ = run(capsys, "table1", "--n-max", "16", "--format", "tsv")
    assert code == 0
    expected = (
        "n\t4\t5\t6\t7\t8\t9\t10\t11\t12\t13\t14\t15\t16\n"
        "ed(A_n)\t2\t2\t3\t4\t4-5\t4-6\t5-7\t6-8\t6-9\t6-10\t7-11\t8-12\t8-13\n"
        "ed(cover A_n; 2)\t2\t2\t2\t2\t8\t8\t8\t8\t16\t16\t32\t32\t128\n"
        "ed(cover A_n)\t2\t2\t4\t4\t8\t8-14\t8-15\t8-16\t16-25\t16-26"
        "\t32-43\t32-44\t128\n"
    )
    assert out == expected


def test_table1_row3_values(capsys):
    code, out, _ = run(capsys, "table1", "--n-max", "10")
    data = json.loads(out)
    row3 = data["ed(cover A_n)"]
    assert row3[4] == "8"      # n = 8 collapses
    assert row3[6] == "8-15"   # n = 10


def test_table1_byte_identical_across_workers(capsys):
    _, out1, _ = run(capsys, "table1", "--n-max", "8", "--verify-max", "6",
                     "--format", "tsv")
    _, out2, _ = run(capsys, "table1", "--n-max", "8", "--verify-max", "6",
                     "--format", "tsv", "--workers", "4")
    assert out1 == out2


def test_ed2_computed(capsys):
    code, out, _ = run(capsys, "ed2", "-n", "6", "--which", "alt",
                       "--computed")
    assert code == 0
    data = json.loads(out)
    assert data["ed2_formula"] == data["ed2_computed"] == 2
    assert data["variant"] == "alt"
    assert (data["ed_lower"], data["ed_upper"]) == (4, 4)


def test_ed2_formula_only_skips_computation(capsys):
    code, out, _ = run(capsys, "ed2", "-n", "16", "--which", "alt")
    assert code == 0
    data = json.loads(out)
    assert data["ed2_formula"] == 128
    assert data["ed2_computed"] == "skipped"


def test_chartab_subcommand(capsys):
    # the double cover of A_4 has order 24 with a 2-dimensional faithful irrep
    code, out, _ = run(capsys, "chartab", "-n", "4", "--subgroup", "alt")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 24
    assert data["degrees"] == [1, 1, 1, 2, 2, 2, 3]
    assert data["min_faithful_dim"] == 2
    # the Sylow preimage is the quaternion group
    code, out, _ = run(capsys, "chartab", "-n", "4", "--subgroup", "sylow2")
    data = json.loads(out)
    assert data["order"] == 16
    assert data["min_faithful_dim"] == 2


def test_qform_subcommand(capsys):
    code, out, _ = run(capsys, "qform", "1,-1,2/3")
    data = json.loads(out)
    assert data["dim"] == 3
    assert data["witt_index"] == 1
    assert data["hasse_ramified"] == [2, 3]


def test_trace_form_invariants(capsys):
    code, out, _ = run(capsys, "trace-form", "x^2 - 1")
    assert code == 0
    data = json.loads(out)
    assert data["disc"] == 1
    assert data["signature"] == [2, 0]
    assert data["hasse_ramified"] == []


def test_trace_form_not_squarefree(capsys):
    code, _, err = run(capsys, "trace-form", "x^2 - 2x + 1")
    assert code == 2
    assert "squarefree" in err


def test_trace_check(capsys):
    code, out, _ = run(capsys, "trace-check", "-n", "12", "--trials", "10")
    assert code == 0
    data = json.loads(out)
    assert data["s"] == 2
    assert data["contains_s_ones"] == 10
    assert data["disc_matches"] == 10


def test_trace_check_deterministic_output(capsys):
    _, out1, _ = run(capsys, "--seed", "9", "trace-check", "-n", "6",
                     "--trials", "5")
    _, out2, _ = run(capsys, "trace-check", "-n", "6", "--trials", "5",
                     "--seed", "9")
    assert out1 == out2


def test_size_bound_exit_code(capsys, monkeypatch):
    monkeypatch.setenv(cli.SIZE_BOUND_ENV, "10")
    code, _, err = run(capsys, "chartab", "-n", "8")
    assert code == 3
    assert "bound" in err


def test_size_bound_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.SIZE_BOUND_ENV, "10")
    code, _, _ = run(capsys, "chartab", "-n", "4", "--size-bound", "1000")
    assert code == 0
