import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgbseal import aead
from sgbseal.errors import AuthenticationFailure


class TestSeal:
    def test_reference_vector(self, vector):
        sealed = aead.seal(vector["key"], vector["iv"], vector["plaintext"],
                           vector["asset_id"])
        assert sealed[:26] == vector["ciphertext"]
        assert sealed[26:] == vector["tag"]

    def test_deterministic(self, vector):
        args = (vector["key"], vector["iv"], vector["plaintext"], vector["asset_id"])
        assert aead.seal(*args) == aead.seal(*args)

    def test_output_length(self, vector):
        sealed = aead.seal(vector["key"], vector["iv"], vector["plaintext"],
                           vector["asset_id"])
        assert len(sealed) == 42

    def test_rejects_bad_key_length(self, vector):
        with pytest.raises(ValueError):
            aead.seal(b"\x00" * 31, vector["iv"], vector["plaintext"], 1)

    def test_rejects_bad_plaintext_length(self, vector):
        with pytest.raises(ValueError):
            aead.seal(vector["key"], vector["iv"], b"\x00" * 25, 1)


class TestUnseal:
    def test_reference_vector(self, vector):
        plaintext = aead.unseal(vector["key"], vector["iv"],
                                vector["ciphertext"] + vector["tag"],
                                vector["asset_id"])
        assert plaintext == vector["plaintext"]

    def test_forged_tag_fails(self, vector):
        sealed = bytearray(vector["ciphertext"] + vector["tag"])
        sealed[-1] ^= 0x01
        with pytest.raises(AuthenticationFailure):
            aead.unseal(vector["key"], vector["iv"], bytes(sealed), vector["asset_id"])

    def test_flipped_aad_fails(self, vector):
        with pytest.raises(AuthenticationFailure):
            aead.unseal(vector["key"], vector["iv"],
                        vector["ciphertext"] + vector["tag"], 0xE803)

    def test_rejects_bad_sealed_length(self, vector):
        with pytest.raises(ValueError):
            aead.unseal(vector["key"], vector["iv"], b"\x00" * 41, 1)

    def test_failure_message_carries_no_detail(self, vector):
        sealed = bytearray(vector["ciphertext"] + vector["tag"])
        sealed[0] ^= 0x01
        with pytest.raises(AuthenticationFailure) as excinfo:
            aead.unseal(vector["key"], vector["iv"], bytes(sealed), vector["asset_id"])
        assert str(excinfo.value) == "authentication failed"


@settings(max_examples=100, deadline=None)
@given(key=st.binary(min_size=32, max_size=32),
       counter=st.integers(0, 2**32 - 1),
       timestamp=st.integers(0, 2**64 - 1),
       plaintext=st.binary(min_size=26, max_size=26),
       asset_id=st.integers(0, 2**16 - 1))
def test_round_trip(key, counter, timestamp, plaintext, asset_id):
    from sgbseal.frame import build_iv

    iv = build_iv(counter, timestamp)
    sealed = aead.seal(key, iv, plaintext, asset_id)
    assert aead.unseal(key, iv, sealed, asset_id) == plaintext
