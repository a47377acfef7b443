from bockstein.calculus import decorated
from bockstein.calculus.decorated import Decoration
from bockstein.services.ledger import law_range, verify_paper


def _mutated_sign_product(original):
    def sign(e1, e2):
        if {e1, e2} == {Decoration.PLUS, Decoration.MINUS}:
            return Decoration.PLUS
        return original(e1, e2)

    return sign


def test_fresh_ledger_passes():
    report = verify_paper()
    assert report.passed, "\n".join(e.line() for e in report.failures)
    sections = {e.section for e in report.entries}
    assert {"B_2", "B_12", "decomposition n=5", "decomposition n=12", "map n=12 m=9"} <= sections
    assert any(s.startswith("map n=4") for s in sections)
    assert any(s.startswith("no exotic decomposition") for s in sections)


def test_ledger_replays_printed_chain():
    report = verify_paper(max_n=6)
    names = {(e.section, e.name) for e in report.entries}
    assert ("decomposition n=6", "D1 (+) D2 = B_{n-1}") in names
    assert ("decomposition n=6", "(D1 [+] D2)(Z_(p)) = n-2") in names
    assert ("map n=6 m=3", "dim(D1 [+] (D2+1)) = n-1") in names
    chain = [e for e in report.entries if e.section == "decomposition n=5" and e.name.startswith("2+ [+]")]
    assert chain and chain[0].left == "3-"


def test_mutated_sign_rule_breaks_decomposition_entries(monkeypatch):
    monkeypatch.setattr(decorated, "sign_product", _mutated_sign_product(decorated.sign_product))
    report = verify_paper(max_n=8, law_max_value=1)
    assert not report.passed
    failed_sections = {e.section for e in report.failures}
    assert "decomposition n=5" in failed_sections
    assert any(e.name == "2+ [+] (n-4)- = (n-2)-" for e in report.failures)


def test_extended_range_still_passes():
    report = verify_paper(max_n=20, law_max_value=1)
    assert report.passed, "\n".join(e.line() for e in report.failures)
    assert any(e.section == "map n=20 m=17" for e in report.entries)


def test_law_range():
    types = law_range(2)
    assert len(types) == 3 * 5
    assert len(set(types)) == len(types)


def test_report_text_has_summary():
    report = verify_paper(max_n=5, law_max_value=1)
    text = report.to_text()
    assert text.splitlines()[-1] == f"{len(report.entries)}/{len(report.entries)} entries pass"
