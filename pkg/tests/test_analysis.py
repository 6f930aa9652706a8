import struct
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from oracles import GOLDEN_TABLE, naive_find, naive_i_min
from pptcode.analysis import (
    build_index,
    cached_labels,
    class_frequencies,
    invert,
    min_unique_window,
    per_position_window,
    read_cache,
    write_cache,
)
from pptcode.classes import ClassLabel
from pptcode.coding import w_labels
from pptcode.triples import ValidationError

GOLDEN_LETTERS = "".join(row[3] for row in GOLDEN_TABLE)
SEQ = "".join(label.name for label in w_labels(3000))


def test_index_n13_k4():
    index = build_index(13, 4)
    grams = [SEQ[p : p + 4] for p in range(10)]
    assert grams[:5] == ["ABCD", "BCDE", "CDEB", "DEBE", "EBEC"]
    assert index.is_unique()
    assert all(index.lookup(g) == [p + 1] for p, g in enumerate(grams))


def test_index_n2_k1():
    assert build_index(2, 1).table == {"A": [1], "B": [2]}


def test_index_errors():
    with pytest.raises(ValidationError):
        build_index(3, 4)
    with pytest.raises(ValidationError):
        build_index(5, 0)
    with pytest.raises(ValidationError):
        build_index(10, 2).lookup("ABC")


@pytest.mark.parametrize("n, k", [(33, 1), (33, 2), (500, 3), (1000, 7)])
def test_index_completeness(n, k):
    index = build_index(n, k)
    buckets = [p for positions in index.table.values() for p in positions]
    assert sorted(buckets) == list(range(1, n - k + 2))
    for positions in index.table.values():
        assert positions == sorted(positions)
    for p in range(1, n - k + 2):
        assert p in index.lookup(SEQ[p - 1 : p - 1 + k])


def test_min_unique_window_small():
    report = min_unique_window(13)
    assert report.i_min <= 4
    assert report.i_min == naive_i_min(GOLDEN_LETTERS[:13])
    assert min_unique_window(2).i_min == 1
    with pytest.raises(ValidationError):
        min_unique_window(1)


def test_min_unique_window_n1000_regression():
    report = min_unique_window(1000)
    assert report.i_min == naive_i_min(SEQ[:1000]) == 12


@pytest.mark.parametrize("n", [13, 100, 1000])
def test_report_boundary(n):
    report = min_unique_window(n)
    k = report.i_min
    assert build_index(n, k).is_unique()
    if k > 1:
        assert not build_index(n, k - 1).is_unique()
        assert report.collisions[k - 1] >= 2
    # unique at every longer window too
    assert all(build_index(n, kk).is_unique() for kk in range(k, min(n, k + 5) + 1))
    # the collision histogram counts windows whose gram is shared
    for kk, shared in report.collisions.items():
        counts = Counter(SEQ[p : p + kk] for p in range(n - kk + 1))
        assert shared == sum(c for c in counts.values() if c > 1)


def test_i_min_non_decreasing():
    values = [min_unique_window(n).i_min for n in range(2, 400)]
    assert values == sorted(values)


def test_per_position_window_matches_definition():
    n = 80
    got = per_position_window(n)
    for p in range(n):
        expected = None
        for k in range(1, n - p + 1):
            window = SEQ[p : p + k]
            if sum(SEQ[q : q + k] == window for q in range(n - k + 1)) == 1:
                expected = k
                break
        assert got[p] == expected
    assert max(v for v in got if v is not None) == min_unique_window(n).i_min


@pytest.mark.parametrize(
    "gram, n, expected", [("ABCD", 13, [1]), ("DEBE", 13, [4]), ("FFFF", 33, []), ("AA", 33, [10, 29])]
)
def test_invert_examples(gram, n, expected):
    assert invert(gram, n) == expected
    assert naive_find(SEQ, gram, n) == expected


def test_invert_edge_cases():
    assert invert("ABCDE", 3) == []
    assert invert([ClassLabel.A, ClassLabel.B], 13) == naive_find(SEQ, "AB", 13) == [1, 11]
    with pytest.raises(ValidationError):
        invert("", 13)
    with pytest.raises(ValidationError):
        invert("ABZ", 13)


@settings(max_examples=300)
@given(st.data())
def test_invert_agrees_with_naive_scan(data):
    n = data.draw(st.integers(1, 3000))
    k = data.draw(st.integers(1, min(n, 12)))
    if data.draw(st.booleans()):
        start = data.draw(st.integers(0, n - k))
        gram = SEQ[start : start + k]
    else:
        gram = data.draw(st.text(alphabet="ABCDEF", min_size=k, max_size=k))
    found = invert(gram, n)
    assert found == naive_find(SEQ, gram, n)
    if n == 1 or len(gram) >= min_unique_window(n).i_min:
        assert len(found) <= 1


def test_class_frequencies():
    assert class_frequencies(1) == {ClassLabel.A: 1, **{c: 0 for c in list(ClassLabel)[1:]}}
    six = class_frequencies(6)
    assert [six[c] for c in ClassLabel] == [1, 2, 1, 1, 1, 0]
    tally = Counter(GOLDEN_LETTERS)
    got = class_frequencies(33)
    assert {c.name: v for c, v in got.items()} == {ch: tally.get(ch, 0) for ch in "ABCDEF"}
    assert [got[c] for c in ClassLabel] == [6, 6, 6, 6, 5, 4]
    assert sum(class_frequencies(777).values()) == 777


def test_cache_format(tmp_path):
    path = tmp_path / "w.pptw"
    labels = w_labels(10)
    write_cache(path, labels)
    raw = path.read_bytes()
    assert raw[:4] == b"PPTW"
    assert raw[4] == 1
    assert struct.unpack("<Q", raw[5:13]) == (10,)
    assert raw[13:] == bytes([0, 1, 2, 3, 4, 1, 4, 2, 5, 0])
    assert read_cache(path) == labels


@pytest.mark.parametrize(
    "raw",
    [b"PPT", b"XXXX\x01" + struct.pack("<Q", 0), b"PPTW\x02" + struct.pack("<Q", 0),
     b"PPTW\x01" + struct.pack("<Q", 3) + b"\x00\x01", b"PPTW\x01" + struct.pack("<Q", 1) + b"\x06"],
)
def test_cache_rejects_bad_files(tmp_path, raw):
    path = tmp_path / "bad.pptw"
    path.write_bytes(raw)
    with pytest.raises(ValidationError):
        read_cache(path)


def test_cached_labels_writes_then_reads(tmp_path):
    first = cached_labels(500, tmp_path)
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["w-by-hypotenuse-500.pptw"]
    assert read_cache(files[0]) == first == w_labels(500)
    assert cached_labels(500, tmp_path) == first
    assert min_unique_window(500, first) == min_unique_window(500)
