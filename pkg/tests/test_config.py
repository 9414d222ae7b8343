from config import DEFAULT_SEED, Config

VARIABLES = (
    "ISOCANT_MC_SAMPLES",
    "ISOCANT_MC_SEED",
    "ISOCANT_MC_WORKERS",
    "ISOCANT_MC_CHUNK",
    "ISOCANT_LOG_LEVEL",
)


def test_defaults(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(name, raising=False)
    config = Config()
    assert config.MC_SAMPLES == 1_000_000
    assert config.MC_SEED == DEFAULT_SEED == 0x5EED1500CA17
    assert config.MC_WORKERS == 4
    assert config.MC_CHUNK == 65536
    assert config.LOG_LEVEL == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("ISOCANT_MC_SAMPLES", "1234")
    monkeypatch.setenv("ISOCANT_MC_SEED", "0x10")
    monkeypatch.setenv("ISOCANT_LOG_LEVEL", "debug")
    config = Config()
    assert config.MC_SAMPLES == 1234
    assert config.MC_SEED == 16
    assert config.LOG_LEVEL == "DEBUG"
    monkeypatch.setenv("ISOCANT_MC_SEED", "99")
    assert Config().MC_SEED == 99


def test_caps():
    assert Config.LP_DIMENSION_CAP == 4
    assert Config.VERTEX_DIMENSION_CAP == Config.ZONOTOPE_GENERATOR_CAP == 24
    assert Config.CLOSED_FORM_DIMENSION_CAP == 64
