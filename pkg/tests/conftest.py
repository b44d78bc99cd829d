import json

import pytest

from toricreg import GeneratorSet, families


@pytest.fixture(scope="session")
def quartic():
    """d=2, D=4, e=2 surface with the single hole (1,1)."""
    return families.quartic_singular_surface()


@pytest.fixture(scope="session")
def even_sextic():
    """d=2, D=6, e=2 surface where reg exceeds sigma by one."""
    return families.even_sextic_surface()


@pytest.fixture(scope="session")
def sextic():
    """d=2, D=6 surface with a singular vertex and e=2."""
    return families.sextic_surface()


@pytest.fixture
def write_instance(tmp_path):
    def _write(A, name="inst.json"):
        path = tmp_path / name
        path.write_text(json.dumps(
            {"d": A.d, "A": [list(p) for p in A.points]}))
        return str(path)
    return _write
