"""graph6 / edge-list interchange and corpus generation."""

import itertools
import random

import pytest

from toughlab import (
    CorpusStream,
    FormatError,
    Graph,
    complete_graph,
    enumerate_labeled,
    enumerate_labeled_connected,
    is_connected,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)

from _oracles import connected_labeled_count


def test_parse_known_records(c4):
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("@") == complete_graph(1)
    assert parse_graph6("Cl") == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert parse_graph6("Cl") == c4


def test_parse_optional_header():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_write_known_records(k4):
    assert write_graph6(complete_graph(1)) == "@"
    assert write_graph6(k4) == "C~"


def test_roundtrip_exhaustive_small():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_random_up_to_word_budget():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 30)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        assert parse_graph6(write_graph6(g)) == g


def test_parse_errors_are_distinct():
    with pytest.raises(FormatError, match="invalid graph6 character"):
        parse_graph6("C!")
    with pytest.raises(FormatError, match="truncated"):
        parse_graph6("D~")
    with pytest.raises(FormatError, match="long-form"):
        parse_graph6("~??")
    with pytest.raises(FormatError, match="trailing"):
        parse_graph6("C~~")
    with pytest.raises(FormatError, match="empty"):
        parse_graph6("   ")
    with pytest.raises(FormatError, match="caps at"):
        write_graph6(Graph.from_edges(63, []))


def test_edge_list_parsing():
    assert parse_edge_list("2\n0 1") == complete_graph(2)
    c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0")
    assert c4 == parse_graph6("Cl")
    dup = parse_edge_list("3\n0 1\n1 0")
    assert dup.m == 1


def test_edge_list_errors():
    with pytest.raises(FormatError, match="out of range"):
        parse_edge_list("2\n0 5")
    with pytest.raises(FormatError, match="self-loop"):
        parse_edge_list("3\n1 1")
    with pytest.raises(FormatError, match="malformed"):
        parse_edge_list("3\n0 x")
    with pytest.raises(FormatError, match="odd"):
        parse_edge_list("3\n0 1 2")
    with pytest.raises(FormatError, match="not an integer"):
        parse_edge_list("zzz")


def test_enumeration_counts_match_recurrence():
    expected = {1: 1, 3: 4, 4: 38}
    for n, want in expected.items():
        assert sum(1 for _ in enumerate_labeled_connected(n)) == want
    for n in range(1, 6):
        got = sum(1 for _ in enumerate_labeled_connected(n))
        assert got == connected_labeled_count(n)


def test_enumeration_is_deterministic_and_filtered():
    stream = enumerate_labeled_connected(4)
    first = [write_graph6(g) for g in stream]
    second = [write_graph6(g) for g in stream]  # independent second pass
    assert first == second
    assert all(is_connected(g) for g in stream)
    full = sum(1 for _ in enumerate_labeled(4))
    assert full == 64


def test_enumeration_rejects_out_of_range():
    with pytest.raises(ValueError):
        CorpusStream.generated(0)
    with pytest.raises(ValueError):
        CorpusStream.generated(8)


def test_enumeration_is_pull_based_at_the_top_size():
    # pulling a few records from the 2**21-mask stream must be instant
    import itertools as it
    head = list(it.islice(iter(enumerate_labeled_connected(7)), 3))
    assert len(head) == 3
    assert all(g.n == 7 and is_connected(g) for g in head)


def test_graph6_file_stream(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("C~\nCl\n\n@\n", encoding="utf-8")
    stream = CorpusStream.from_graph6_file(str(path))
    graphs = list(stream)
    assert [g.n for g in graphs] == [4, 4, 1]
    assert list(stream) == graphs  # re-iterable
