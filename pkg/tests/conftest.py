from binascii import unhexlify
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent

# Reference known-answer vector (also shipped in vectors/reference.vec).
VECTOR = {
    "key": unhexlify("1c195d64578ad0af88addd2fa452f37ee1d390728cf0258e316f1b732d2f5756"),
    "asset_id": 0xE802,
    "counter": 0x7E081A3D,
    "timestamp": 0x0EB894A953803D93,
    "iv": unhexlify("7e081a3d0eb894a953803d93"),
    "plaintext": unhexlify("e9c534097001dd986abc34454aad50bb48376c3c0de7fe3fa5ab"),
    "ciphertext": unhexlify("62ab5d2df4687b43755b53792f9f6c6ee27169e8f89b52128cb3"),
    "tag": unhexlify("27d94586306bec73c04157efb2640c63"),
    "frame": unhexlify(
        "e8027e081a3d0eb894a953803d93"
        "62ab5d2df4687b43755b53792f9f6c6ee27169e8f89b52128cb3"
        "27d94586306bec73c04157efb2640c63"
    ),
}


@pytest.fixture
def vector():
    return dict(VECTOR)


@pytest.fixture
def reference_vector_path():
    return REPO_ROOT / "vectors" / "reference.vec"
