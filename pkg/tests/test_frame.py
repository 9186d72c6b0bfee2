import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgbseal import frame
from sgbseal.errors import MalformedFrame

counters = st.integers(min_value=0, max_value=frame.COUNTER_MAX)
timestamps = st.integers(min_value=0, max_value=frame.TIMESTAMP_MAX)
asset_ids = st.integers(min_value=0, max_value=frame.ASSET_ID_MAX)


class TestIv:
    def test_reference_vector(self, vector):
        assert frame.build_iv(vector["counter"], vector["timestamp"]) == vector["iv"]

    def test_zero(self):
        assert frame.build_iv(0, 0) == bytes(12)

    def test_saturated(self):
        assert frame.build_iv(frame.COUNTER_MAX, frame.TIMESTAMP_MAX) == b"\xff" * 12

    def test_big_endian_counter(self):
        iv = frame.build_iv(1, 0)
        assert iv[:4] == b"\x00\x00\x00\x01"

    def test_split_reference_vector(self, vector):
        assert frame.split_iv(vector["iv"]) == (vector["counter"], vector["timestamp"])

    def test_split_zero(self):
        assert frame.split_iv(bytes(12)) == (0, 0)

    @pytest.mark.parametrize("length", [0, 11, 13])
    def test_split_rejects_bad_length(self, length):
        with pytest.raises(ValueError):
            frame.split_iv(bytes(length))

    @pytest.mark.parametrize("counter,timestamp", [(-1, 0), (2**32, 0), (0, 2**64)])
    def test_build_rejects_out_of_range(self, counter, timestamp):
        with pytest.raises(ValueError):
            frame.build_iv(counter, timestamp)

    @given(counter=counters, timestamp=timestamps)
    def test_round_trip(self, counter, timestamp):
        assert frame.split_iv(frame.build_iv(counter, timestamp)) == (counter, timestamp)


class TestFrameCodec:
    def test_reference_vector(self, vector):
        encoded = frame.encode_frame(
            vector["asset_id"], vector["iv"], vector["ciphertext"] + vector["tag"]
        )
        assert encoded == vector["frame"]
        assert len(encoded) == 56

    def test_all_zero(self):
        assert frame.encode_frame(0, bytes(12), bytes(42)) == bytes(56)

    def test_decode_reference_vector(self, vector):
        asset_id, iv, ciphertext = frame.decode_frame(vector["frame"])
        assert asset_id == vector["asset_id"]
        assert iv == vector["iv"]
        assert ciphertext == vector["ciphertext"] + vector["tag"]

    @pytest.mark.parametrize("length", [0, 55, 57, 112])
    def test_decode_rejects_bad_length(self, length):
        with pytest.raises(MalformedFrame):
            frame.decode_frame(bytes(length))

    def test_encode_rejects_bad_ciphertext_length(self):
        with pytest.raises(ValueError):
            frame.encode_frame(0, bytes(12), bytes(41))

    @given(asset_id=asset_ids, counter=counters, timestamp=timestamps,
           ciphertext=st.binary(min_size=42, max_size=42))
    def test_round_trip(self, asset_id, counter, timestamp, ciphertext):
        iv = frame.build_iv(counter, timestamp)
        decoded = frame.decode_frame(frame.encode_frame(asset_id, iv, ciphertext))
        assert decoded == (asset_id, iv, ciphertext)

    @given(data=st.binary(min_size=56, max_size=56))
    def test_re_encode_is_identity(self, data):
        asset_id, iv, ciphertext = frame.decode_frame(data)
        assert frame.encode_frame(asset_id, iv, ciphertext) == data


class TestSgbPacking:
    def test_all_zero_bits(self):
        assert frame.pack_sgb([0] * 202) == bytes(26)

    def test_all_one_bits(self):
        # 200 payload bits fill 25 bytes; the last byte carries the final
        # two payload bits followed by six zero padding bits.
        assert frame.pack_sgb([1] * 202) == b"\xff" * 25 + b"\xc0"

    def test_low_six_bits_always_zero(self):
        packed = frame.pack_sgb([1] * 202)
        assert packed[-1] & 0x3F == 0

    def test_rejects_wrong_bit_count(self):
        with pytest.raises(ValueError):
            frame.pack_sgb([0] * 201)

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            frame.pack_sgb([2] + [0] * 201)

    @given(bits=st.lists(st.integers(0, 1), min_size=202, max_size=202))
    def test_round_trip(self, bits):
        assert list(frame.unpack_sgb(frame.pack_sgb(bits))) == bits
