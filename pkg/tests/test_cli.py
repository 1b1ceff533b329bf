import json

from pillowcase.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_weight_json(capsys):
    assert call(capsys, "weight", "2,2", "--json") == (0, '{"w": "9/16"}', "")


def test_vanish(capsys):
    assert call(capsys, "vanish", "3,1")[:2] == (0, "0")


def test_info(capsys):
    code, out, _ = call(capsys, "info", "5,4,4,2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["two_quotient"] == {"alpha": {"parts": [2, 2, 1], "size": 5},
                                    "beta": {"parts": [2], "size": 2}}
    assert data["core_size"] == 1 and data["balanced"] is False and data["w"] == "0"


def test_json_is_deterministic(capsys):
    a = call(capsys, "expect", "--obs", "p1(alpha)", "--qseries", "8", "--json", "--threads", "1")
    b = call(capsys, "expect", "--obs", "p1(alpha)", "--qseries", "8", "--json", "--threads", "2")
    assert a == b
    assert json.loads(a[1])["series"]["coeffs"][:3] == ["-1/24", "0", "1/4"]


def test_exit_codes(capsys):
    assert call(capsys, "bogus")[0] == 2
    code, _, err = call(capsys, "weight", "2,2", "--nope")
    assert code == 2 and "hint" in err
    assert call(capsys, "gnu", "3,1", "2,1")[0] == 1          # domain error
    assert call(capsys, "weight", "1,2")[0] == 2              # malformed partition


def test_fit_and_asympt(capsys):
    assert call(capsys, "fit", "--obs", "p1", "--weight", "2")[1] == "E2(q^2)"
    code, out, _ = call(capsys, "asympt", "--obs", "p1", "--weight", "2", "--json")
    assert json.loads(out)["asymptotics"] == {"1": {"0": "-1/4"}, "2": {"2": "1/24"}}


def test_eval(capsys):
    code, out, _ = call(capsys, "eval", "--eisenstein", "2:2", "--h", "1", "--order", "60", "--json")
    est = json.loads(out)["estimate"]
    assert abs(est["value"] - 0.16123349030802) < 1e-12 and est["error"] < 1e-12


def test_misc_commands(capsys):
    assert call(capsys, "char", "2,2", "2,2")[1] == "2"
    assert call(capsys, "skewchar", "2,2", "1,1", "2")[1] == "-1"
    assert call(capsys, "lr", "1", "1", "2")[1] == "1"
    assert call(capsys, "sstar", "1", "2,1")[1] == "3"
    assert call(capsys, "pk", "2", "1")[1] == "47/24"
    assert call(capsys, "pbark", "2", "1")[1] == "2"
    assert call(capsys, "gnu", "3,1", "2,2", "--both")[1] == "direct:  -4/3\nformula: -4/3"
    assert call(capsys, "hurwitz", "--degree", "3", "--profile", "3", "--profile", "3")[1] == "1/3"
    assert call(capsys, "zseries", "4", "--check")[1].endswith("true")
    assert call(capsys, "coverseries", "--nu", "1,1", "--order", "2")[1] == "0 0 0"
    assert call(capsys, "sobolev", "2")[0] == 0
    assert call(capsys, "expect", "--obs", "p2", "--fixed-n", "2")[1] == "0"


def test_budget_override_announces(capsys):
    code, _, err = call(capsys, "concentration", "8", "0.5", "--max-n", "10")
    assert code == 0 and "enumerating about" in err
