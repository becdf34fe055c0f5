import pytest

from levelrank import config
from levelrank.errors import ParseError


def test_defaults():
    lim = config.Limits()
    assert (lim.max_partition_n, lim.max_multipartitions, lim.shift_bound) == (40, 200_000, 4)


def test_precedence(tmp_path):
    cfg = tmp_path / "limits.conf"
    cfg.write_text("# desk limits\nmax_partition_n = 20\nshift_bound = 2\noutput = json\n")
    lim = config.load(cfg, environ={})
    assert lim.max_partition_n == 20 and lim.shift_bound == 2 and lim.output == "json"
    lim = config.load(cfg, environ={config.ENV_VAR: "shift_bound=3"})
    assert lim.shift_bound == 3 and lim.max_partition_n == 20
    lim = config.load(cfg, environ={config.ENV_VAR: "shift_bound=3"}, shift_bound=1)
    assert lim.shift_bound == 1


@pytest.mark.parametrize("text", ["nonsense", "bogus = 1", "max_partition_n = ten"])
def test_bad_config(tmp_path, text):
    cfg = tmp_path / "bad.conf"
    cfg.write_text(text)
    with pytest.raises(ParseError):
        config.load(cfg, environ={})


def test_limits_must_be_positive():
    with pytest.raises(ValueError):
        config.Limits(max_multipartitions=0)
    with pytest.raises(ValueError):
        config.Limits(output="xml")
