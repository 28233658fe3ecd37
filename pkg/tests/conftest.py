import json

import pytest

from quivercone.quiver import validate_quiver


@pytest.fixture
def a2():
    return validate_quiver(["1", "2"], [("a", "1", "2")])


@pytest.fixture
def a3():
    return validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])


@pytest.fixture
def k2():
    return validate_quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


@pytest.fixture
def k3():
    return validate_quiver(
        ["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")]
    )


@pytest.fixture
def quiver_file(tmp_path):
    def write(name, vertices, arrows):
        path = tmp_path / f"{name}.quiver"
        path.write_text(
            json.dumps(
                {
                    "vertices": vertices,
                    "arrows": [
                        {"id": i, "tail": t, "head": h} for i, t, h in arrows
                    ],
                }
            )
        )
        return str(path)

    return write
