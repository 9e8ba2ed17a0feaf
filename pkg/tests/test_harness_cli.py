import pytest

from agreelab import cli
from agreelab.corpus import CorpusError, format_corpus, load_corpus, parse_corpus
from agreelab.errors import LexiconError, UnknownWordError
from agreelab.harness import ENGINES, judge, run_corpus, run_rows
from agreelab.lcg import check_proof, parse_category
from agreelab.lexicon import load_lexicon, parse_lexicon
from agreelab.report import format_table, format_tsv, plot_report

LEXICON = cli.default_lexicon()
CORPUS = cli.default_corpus()


@pytest.fixture(scope="module")
def lexicon():
    return load_lexicon(LEXICON)


@pytest.fixture(scope="module")
def report():
    return run_corpus(CORPUS, LEXICON)


# -- lexicon files ----------------------------------------------------------------


def test_lexicon_single_category():
    lex = parse_lexicon("Kim := np & sg & 3")
    assert lex["Kim"].lcg_categories == (parse_category("np & sg & 3"),)


def test_lexicon_ambiguous_entry():
    lex = parse_lexicon("soundly := (s\\(np&sg))\\(s\\(np&sg)) ; (s\\(np&pl))\\(s\\(np&pl))")
    assert len(lex["soundly"].lcg_categories) == 2


def test_lexicon_repeated_lines_merge():
    lex = parse_lexicon("x := a\nx := b\nx := a\n")
    assert [str(c) for c in lex["x"].lcg_categories] == ["a", "b"]


def test_lexicon_conj_marker():
    lex = parse_lexicon("und :conj")
    assert lex["und"].is_conj and lex["und"].lcg_categories == ()


def test_lexicon_attribute_values_and_comments():
    lex = parse_lexicon("# header\nKim := np  # trailing\nKim :a= {noun:+}\n\n")
    assert lex["Kim"].avm["noun"] == "+"
    assert lex.source is None and len(lex) == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("Kim := np\nrubbish here", 2),
        ("x := (s", 1),
        ("und :conj\nund := np", 2),
        ("x := np\nx :a= {a:+}\nx :a= {a:-}", 3),
        ("x :a= {a:+}", 1),
        ("x := np ;", 1),
        ("x :a= {a:+", 1),
    ],
)
def test_lexicon_errors_carry_line_numbers(text, line):
    with pytest.raises(LexiconError) as info:
        parse_lexicon(text, "t.lex")
    assert info.value.line == line
    assert f"t.lex:{line}:" in str(info.value)


def test_load_lexicon_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_lexicon(tmp_path / "nope.lex")


def test_shipped_lexicon_has_every_corpus_word(lexicon):
    for row in load_corpus(CORPUS):
        assert all(w in lexicon for w in row.tokens)


# -- corpus files -----------------------------------------------------------------


def test_corpus_round_trip():
    rows = load_corpus(CORPUS)
    assert parse_corpus(format_corpus(rows, header="copy")) == rows


@pytest.mark.parametrize(
    "text",
    [
        "r1\tKim slept\tmaybe\taccept\taccept",
        "r1\tKim slept\taccept\taccept",
        "r1\tKim slept\taccept\t-\taccept",
        "r1\tKim slept\taccept\taccept\taccept\nr1\tKim slept\taccept\taccept\taccept",
        "r1\t \taccept\taccept\taccept",
    ],
)
def test_corpus_errors(text):
    with pytest.raises(CorpusError):
        parse_corpus(text)


# -- judging ------------------------------------------------------------------------


def test_judge_examples(lexicon):
    assert judge(["Kim", "slept"], lexicon).verdict == "accept"
    assert judge(["him", "runs"], lexicon).verdict == "reject"
    j = judge("Er findet und hilft Frauen".split(), lexicon)
    assert j.verdict == "accept" and check_proof(j.proof)


def test_judge_tries_every_reading(lexicon):
    assert len(lexicon["soundly"].lcg_categories) == 2
    assert judge("they snore soundly".split(), lexicon).verdict == "accept"
    assert judge("Kim snores soundly".split(), lexicon).verdict == "accept"
    assert judge("Kim snore soundly".split(), lexicon).verdict == "reject"


def test_judge_reports_unknown_word(lexicon):
    with pytest.raises(UnknownWordError) as info:
        judge(["Kim", "snored"], lexicon)
    assert info.value.word == "snored"


def test_judge_unknown_engine(lexicon):
    with pytest.raises(ValueError):
        judge(["Kim", "slept"], lexicon, "chart")


def test_avm_engine_outside_backbone(lexicon):
    assert judge("Kim snores soundly".split(), lexicon, "avm-sub").verdict == "-"


def test_rejections_needing_the_pool_are_flagged(lexicon):
    j = judge("Kim grew wealthy and a Republican".split(), lexicon)
    assert j.verdict == "reject" and j.pool_bounded
    assert not judge(["him", "runs"], lexicon).pool_bounded


def test_shipped_corpus_has_no_mismatches(report):
    assert report.ok
    assert [r.row.id for r in report.rows if not r.ok] == []
    assert report.summary()["mismatched rows"] == 0


def test_every_lcg_accept_carries_a_checked_proof(report):
    for r in report.rows:
        j = r.results["lcg"]
        if j.verdict == "accept":
            assert j.proof is not None and check_proof(j.proof)


def test_avm_columns_agree(report):
    assert all(r.modes_agree for r in report.rows)


def test_report_is_deterministic(report):
    again = run_corpus(CORPUS, LEXICON)
    assert format_tsv(again) == format_tsv(report)
    assert [r.results for r in again.rows] == [r.results for r in report.rows]


def test_empty_corpus(lexicon):
    rep = run_rows([], lexicon)
    assert rep.ok and rep.rows == [] and rep.summary()["rows"] == 0


def test_unknown_word_errors_the_row(lexicon):
    rows = parse_corpus("r1\tKim slept\taccept\taccept\taccept\nr2\tKim snored\taccept\taccept\taccept")
    rep = run_rows(rows, lexicon)
    assert rep.rows[0].ok
    assert rep.rows[1].error and "snored" in rep.rows[1].error
    assert rep.rows[1].mismatches == list(ENGINES)
    assert not rep.ok


def test_table_and_tsv(report):
    table = format_table(report)
    assert "all rows match expectations" in table
    assert "yes!" in table  # the attribute-value engine's wrong acceptances
    tsv = format_tsv(report).splitlines()
    assert tsv[0].split("\t")[:3] == ["id", "sentence", "gold"]
    assert len(tsv) == len(report.rows) + 1


def test_plot_report(report, tmp_path):
    out = plot_report(report, tmp_path / "matrix.png", title="judgments")
    assert out.exists() and out.read_bytes()[:4] == b"\x89PNG"


# -- command line ------------------------------------------------------------------


def test_cli_corpus_success(capsys):
    assert cli.main(["corpus"]) == 0
    assert "all rows match expectations" in capsys.readouterr().out


def test_cli_corpus_tsv_and_figure(capsys, tmp_path):
    fig = tmp_path / "m.svg"
    assert cli.main(["corpus", "--format", "tsv", "--figure", str(fig)]) == 0
    out = capsys.readouterr()
    assert out.out.startswith("id\tsentence")
    assert fig.exists() and "figure written" in out.err


def test_cli_corpus_mismatch(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("x\tKim slept\taccept\treject\taccept\n", encoding="utf-8")
    assert cli.main(["corpus", "--corpus", str(bad)]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_cli_corpus_unknown_word_is_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("x\tKim snored\taccept\taccept\taccept\n", encoding="utf-8")
    assert cli.main(["corpus", "--corpus", str(bad)]) == 1
    assert "error" in capsys.readouterr().out


def test_cli_corpus_empty(tmp_path, capsys):
    empty = tmp_path / "empty.tsv"
    empty.write_text("# nothing\n", encoding="utf-8")
    assert cli.main(["corpus", "--corpus", str(empty)]) == 0


def test_cli_missing_file(tmp_path, capsys):
    assert cli.main(["corpus", "--lexicon", str(tmp_path / "none.lex")]) == 2
    assert "agreelab:" in capsys.readouterr().err


def test_cli_bad_lexicon(tmp_path, capsys):
    lex = tmp_path / "bad.lex"
    lex.write_text("Kim := (np\n", encoding="utf-8")
    assert cli.main(["parse", "Kim", "--lexicon", str(lex)]) == 2


def test_cli_usage_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["corpus", "--format", "xml"])
    assert info.value.code == 2


def test_cli_parse_with_proof(capsys):
    assert cli.main(["parse", "Kim became wealthy and a Republican"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Kim became wealthy and a Republican: accept (lcg)")
    assert " co" in out and "wealthy" in out


def test_cli_parse_sequent_style(capsys):
    assert cli.main(["parse", "Kim", "slept", "--style", "sequent"]) == 0
    assert "=> s" in capsys.readouterr().out


def test_cli_parse_reject_and_avm(capsys):
    assert cli.main(["parse", "Kim grew wealthy and a Republican"]) == 0
    assert ": reject (lcg)" in capsys.readouterr().out
    assert cli.main(["parse", "Er findet und hilft Männer und Kindern", "--engine", "avm-gen"]) == 0
    assert ": accept (avm-gen)" in capsys.readouterr().out


def test_cli_parse_unknown_word(capsys):
    assert cli.main(["parse", "Kim snored"]) == 2
    assert "snored" in capsys.readouterr().err
