"""Shortcut map, parity vectors, and prefix generators."""

import pytest

from collatz_parity import (
    BitStreamExhausted,
    BitStreamGenerator,
    HeadCycleGenerator,
    IntegerGenerator,
    ParityVector,
    collatz_sequence,
    collatz_step,
    parity_vector,
    parse_generator,
    prefix,
)


def test_collatz_step_examples():
    assert collatz_step(11) == 17
    assert collatz_step(2) == 1
    assert collatz_step(1) == 2


def test_collatz_step_rejects_zero():
    with pytest.raises(ValueError):
        collatz_step(0)


def test_collatz_sequence_examples():
    assert collatz_sequence(11, 7) == (11, 17, 26, 13, 20, 10, 5)
    assert collatz_sequence(1, 1) == (1,)
    # independent oracle: step-by-step iteration
    seq = [313]
    for _ in range(9):
        seq.append(collatz_step(seq[-1]))
    assert collatz_sequence(313, 10) == tuple(seq)
    assert collatz_sequence(313, 10) == (313, 470, 235, 353, 530, 265, 398, 199, 299, 449)


def test_collatz_sequence_rejects_bad_args():
    with pytest.raises(ValueError):
        collatz_sequence(0, 3)
    with pytest.raises(ValueError):
        collatz_sequence(3, 0)


def test_parity_vector_examples():
    assert str(parity_vector(11, 7)) == "1101001"
    assert str(parity_vector(7, 12)) == "111010010001"
    for k in range(1, 12):
        assert str(parity_vector(2**k, k)) == "0" * k


def test_parity_vector_matches_sequence_parity():
    # every bit equals the parity of the corresponding sequence term
    for N in range(1, 10_001):
        bits = parity_vector(N, 64).bits
        terms = collatz_sequence(N, 64)
        assert all(b == (t & 1) for b, t in zip(bits, terms))


def test_parity_vector_validation():
    with pytest.raises(ValueError):
        ParityVector(())
    with pytest.raises(ValueError):
        ParityVector((0, 2))
    with pytest.raises(ValueError):
        ParityVector.from_string("10a1")
    with pytest.raises(ValueError):
        ParityVector.from_string("")


def test_parity_vector_helpers():
    v = ParityVector.from_string("101101")
    assert v.n == 6 and v.ones == 4
    assert v.one_positions() == (1, 3, 4, 6)
    assert str(v.concat(ParityVector.from_string("01"))) == "10110101"
    assert str(ParityVector.from_string("10").repeat(3)) == "101010"


def test_from_integer_generator_matches_parity_vector():
    for N in (1, 2, 7, 27, 97, 313, 10**30 + 1):
        gen = IntegerGenerator(N)
        for n in (1, 5, 33):
            assert gen.prefix(n) == parity_vector(N, n)


def test_prefix_consistency():
    gens = [
        IntegerGenerator(27),
        HeadCycleGenerator(cycle=ParityVector.from_string("100")),
        HeadCycleGenerator(cycle=ParityVector.from_string("01"),
                           head=ParityVector.from_string("1101")),
        BitStreamGenerator(tuple(int(b) for b in "110100111010")),
    ]
    for gen in gens:
        for j in range(1, 12):
            assert prefix(gen, j + 1).bits[:j] == prefix(gen, j).bits


def test_head_cycle_examples():
    gen = HeadCycleGenerator(cycle=ParityVector.from_string("100"))
    assert str(gen.prefix(6)) == "100100"
    gen = HeadCycleGenerator(cycle=ParityVector.from_string("01"),
                             head=ParityVector.from_string("11"))
    assert str(gen.prefix(7)) == "1101010"


def test_generator_reruns_identically():
    gen = IntegerGenerator(27)
    assert gen.prefix(40) == gen.prefix(40)
    it1, it2 = gen.bits(), gen.bits()
    assert [next(it1) for _ in range(10)] == [next(it2) for _ in range(10)]


def test_bit_stream_exhaustion_reports_position():
    gen = BitStreamGenerator((1, 0, 1))
    with pytest.raises(BitStreamExhausted) as exc:
        gen.prefix(5)
    assert exc.value.position == 3


def test_is_b01_shape():
    assert HeadCycleGenerator(cycle=ParityVector.from_string("01")).is_b01_shape() is True
    assert HeadCycleGenerator(cycle=ParityVector.from_string("10")).is_b01_shape() is True
    assert HeadCycleGenerator(cycle=ParityVector.from_string("0101")).is_b01_shape() is True
    assert HeadCycleGenerator(cycle=ParityVector.from_string("100")).is_b01_shape() is False
    assert HeadCycleGenerator(cycle=ParityVector.from_string("010")).is_b01_shape() is False
    assert HeadCycleGenerator(cycle=ParityVector.from_string("1")).is_b01_shape() is False
    assert IntegerGenerator(7).is_b01_shape() is None
    assert BitStreamGenerator((0, 1)).is_b01_shape() is None


def test_parse_generator_grammar(tmp_path):
    assert parse_generator("int:27") == IntegerGenerator(27)
    assert parse_generator("bits:1101") == BitStreamGenerator((1, 1, 0, 1))
    assert parse_generator("cycle:100") == HeadCycleGenerator(
        cycle=ParityVector.from_string("100"))
    assert parse_generator("head:1101;cycle:01") == HeadCycleGenerator(
        cycle=ParityVector.from_string("01"), head=ParityVector.from_string("1101"))
    assert parse_generator("head:;cycle:01") == HeadCycleGenerator(
        cycle=ParityVector.from_string("01"))
    path = tmp_path / "bits.txt"
    path.write_text("110 100\n111 010\n")
    gen = parse_generator(f"file:{path}")
    assert str(gen.prefix(12)) == "110100111010"


@pytest.mark.parametrize("bad", [
    "int:0", "int:x", "bits:", "bits:12", "cycle:", "head:11", "head:11;bits:0",
    "file:/no/such/file", "nonsense", "1101",
])
def test_parse_generator_rejects(bad):
    with pytest.raises(ValueError):
        parse_generator(bad)
