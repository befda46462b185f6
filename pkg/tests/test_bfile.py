import pytest
from hypothesis import given
from hypothesis import strategies as st

from jlcert.bfile import (
    AlignmentError,
    BFile,
    BFileError,
    IndexGapError,
    compare_oeis,
    detect_alignment,
    detect_rows,
    ingest_bfile,
    parse_bfile,
    split_rows,
    triangle_stream,
    write_bfile,
)
from jlcert.report import Status


def test_parse_with_comment():
    bf = parse_bfile("# comment\n0 1\n1 3\n2 2\n")
    assert bf.entries == [(0, 1), (1, 3), (2, 2)]
    assert bf.first_index == 0 and len(bf) == 3


def test_blank_lines_ignored():
    assert parse_bfile("\n5 7\n\n6 -8\n").values == [7, -8]


def test_index_gap():
    with pytest.raises(IndexGapError) as exc:
        parse_bfile("0 1\n2 3\n")
    assert exc.value.line == 2


@pytest.mark.parametrize("text,line", [
    ("0 1\n1\n", 2),
    ("# x\n0 1 2\n", 2),
    ("0 1\n1 3\n2 two\n", 3),
])
def test_malformed_lines_report_line_number(text, line):
    with pytest.raises(BFileError) as exc:
        parse_bfile(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


@given(st.integers(min_value=-5, max_value=5),
       st.lists(st.integers(min_value=-10**30, max_value=10**30), max_size=30))
def test_write_parse_round_trip(tmp_path_factory, start, values):
    path = tmp_path_factory.mktemp("bf") / "b245962.txt"
    bf = BFile("A245962", [(start + i, v) for i, v in enumerate(values)])
    write_bfile(bf, path, header="synthetic")
    back = ingest_bfile(path)
    assert back.seq_id == "A245962" and back.entries == bf.entries


def test_a245962_fixture_matches(data_dir):
    cert = compare_oeis(ingest_bfile(data_dir / "b245962.txt"))
    rep = cert.get("oeis-A245962")
    assert cert.status is Status.VERIFIED
    assert rep.points_checked == 551 and rep.info["first_row"] == 1


def test_a245962_fault_located(data_dir):
    cert = compare_oeis(ingest_bfile(data_dir / "b245962_fault.txt"))
    assert cert.status is Status.VIOLATION
    (v,) = cert.get("oeis-A245962").violations
    assert v["index"] == 100 and v["bfile"] == v["triangle"] + 1


def test_short_file_and_row_zero(data_dir):
    head = ingest_bfile(data_dir / "b245962_head10.txt")
    assert len(head) == 10 and compare_oeis(head).status is Status.VERIFIED
    row0 = ingest_bfile(data_dir / "b245962_row0.txt")
    assert detect_alignment(row0) == 0
    rep = compare_oeis(row0).get("oeis-A245962")
    assert rep.ok and rep.info["skipped_leading_entries"] == 1


def test_fault_inside_alignment_window():
    values = triangle_stream(1, 40)
    values[5] += 1
    bf = BFile("A245962", list(enumerate(values)))
    with pytest.raises(AlignmentError):
        compare_oeis(bf)


@pytest.mark.parametrize("name,seq", [("b037027.txt", "A037027"), ("b073370.txt", "A073370")])
def test_row_triangles_log_concave(data_dir, name, seq):
    bf = ingest_bfile(data_dir / name)
    assert bf.seq_id == seq
    cert = compare_oeis(bf)
    rep = cert.get(f"oeis-{seq}-log-concavity")
    assert cert.status is Status.VERIFIED
    assert rep.info["rows"] == 30 and rep.info["first_row"] == 0
    assert rep.method.endswith("(empirical)")


def test_row_pattern_detection_and_override(data_dir):
    values = ingest_bfile(data_dir / "b037027.txt").values
    pat, first, rows = detect_rows(values)
    assert (pat, first) == ("full", 0)
    assert rows[:4] == [[1], [1, 1], [2, 2, 1], [3, 5, 3, 1]]
    assert detect_rows(values, "full")[:2] == ("full", 0)
    with pytest.raises(AlignmentError):
        detect_rows(values, "half")


def test_split_rows():
    assert split_rows(list(range(7)), "full", 0) == [[0], [1, 2], [3, 4, 5]]
    assert split_rows(list(range(6)), "half", 0) == [[0], [1], [2, 3], [4, 5]]
    with pytest.raises(ValueError):
        split_rows([1], "diagonal", 0)


def test_unsupported_id():
    with pytest.raises(ValueError):
        compare_oeis(BFile("A000045", [(0, 0), (1, 1)]))
