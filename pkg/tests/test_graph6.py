import io
import logging

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from egtcheck.graph import Graph, complete
from egtcheck.graph6 import (
    Graph6Error,
    decode,
    encode,
    read_stream,
    record_length,
    write_stream,
)
from oracles import edge_list, graph6_by_hand, to_nx


@pytest.mark.parametrize(
    "record, graph",
    [
        ("A_", complete(2)),
        ("A?", Graph.empty(2)),
        ("Bw", complete(3)),
        ("C~", complete(4)),
    ],
)
def test_fixed_vectors(record, graph):
    assert decode(record) == graph
    assert encode(graph) == record.encode()


def test_hand_oracle_agrees_on_fixed_vectors():
    assert graph6_by_hand(2, [(0, 1)]) == b"A_"
    assert graph6_by_hand(2, []) == b"A?"
    assert graph6_by_hand(3, [(0, 1), (0, 2), (1, 2)]) == b"Bw"
    assert graph6_by_hand(5, []) == b"D??"
    assert encode(Graph.empty(5)) == b"D??"


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_edge_mask(n, mask)


@given(graphs())
def test_round_trip_and_length(g):
    record = encode(g)
    assert decode(record) == g
    assert len(record) == record_length(g.n) == 1 + -(-(g.n * (g.n - 1) // 2) // 6)


@given(graphs())
def test_encoding_matches_hand_oracle_and_networkx(g):
    record = encode(g)
    assert record == graph6_by_hand(g.n, edge_list(g))
    if g.n > 0:
        assert record == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@given(graphs())
def test_decoding_preserves_labels(g):
    h = nx.from_graph6_bytes(encode(g)) if g.n > 0 else nx.Graph()
    assert sorted(tuple(sorted(e)) for e in h.edges()) == edge_list(decode(encode(g)))


def test_round_trip_at_graph_capacity():
    g = Graph.from_edges(32, [(i, j) for i in range(32) for j in range(i + 1, 32) if (i * j) % 5 == 1])
    assert decode(encode(g)) == g


def test_header_beyond_graph_capacity_is_rejected():
    # short form allows n = 40, the Graph type does not
    with pytest.raises(ValueError):
        decode(bytes([63 + 40]) + b"?" * (record_length(40) - 1))


def test_errors():
    with pytest.raises(Graph6Error, match="outside"):
        decode(b"A\x7f")
    with pytest.raises(Graph6Error, match="truncated"):
        decode("C")
    with pytest.raises(Graph6Error, match="long-form"):
        decode("~??~")
    with pytest.raises(Graph6Error):
        decode("")


def test_nonzero_padding_is_a_warning(caplog):
    # n = 2 has one real bit and five padding bits; 'A`' sets the last padding bit
    with caplog.at_level(logging.WARNING):
        g = decode("A`")
    assert g == complete(2)
    assert "padding" in caplog.text


def test_stream_skips_header_and_blank_lines():
    data = b">>graph6<<A_\n\nBw\nC~\n"
    graphs = list(read_stream(io.BytesIO(data)))
    assert graphs == [complete(2), complete(3), complete(4)]


def test_stream_reports_line_numbers():
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_stream(io.BytesIO(b"A_\nC\n")))


def test_write_stream():
    buf = io.BytesIO()
    assert write_stream(buf, [complete(2), Graph.empty(5)]) == 2
    assert buf.getvalue() == b"A_\nD??\n"
