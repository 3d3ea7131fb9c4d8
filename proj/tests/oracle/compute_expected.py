#!/usr/bin/env python3
"""Independent reference scorer used to freeze expected fixture values.

Everything here is computed from first principles on the fixture files:
memoized recursive edit distance, explicit traceback preference
(Match > Substitute > Delete > Insert, walking back from the corner),
literal mark counting. No code is shared with the toolkit; this script
is the yardstick its results are checked against.

    python3 tests/oracle/compute_expected.py
"""

import json
import os
import sys
from functools import lru_cache

sys.setrecursionlimit(100000)

MARKS = {chr(cp) for cp in range(0x064B, 0x0653)}
SHADDA = "ّ"
VOWELS = MARKS - {SHADDA}


def is_letter(ch):
    return "ء" <= ch <= "ي"


def strip_marks(text):
    return "".join(ch for ch in text if ch not in MARKS)


def clusters(word):
    """[(base, (shadda, vowel-or-None)), ...] for one word."""
    out = []
    for ch in word:
        if ch in MARKS:
            assert out, "fixture has an orphan mark"
            base, (sh, vo) = out[-1]
            if ch == SHADDA:
                assert not sh, "duplicate shadda in fixture"
                out[-1] = (base, (True, vo))
            else:
                assert vo is None, "two vowels on one letter in fixture"
                out[-1] = (base, (sh, ch))
        else:
            out.append((ch, (False, None)))
    return out


def check_canonical(line):
    """Fixtures must already be in canonical form."""
    assert "ـ" not in line
    assert "  " not in line and line == line.strip()
    run = []
    for ch in line + " ":
        if ch in MARKS:
            run.append(ch)
            continue
        if run:
            key = [(0 if m == SHADDA else 1, m) for m in run]
            assert key == sorted(key) and len(set(run)) == len(run), (
                "non-canonical mark run in fixture: " + repr(run))
            run = []


def edit_cost_and_table(ref, hyp):
    """Prefix-distance via memoized recursion; returns the lookup fn."""
    ref = tuple(ref)
    hyp = tuple(hyp)

    @lru_cache(maxsize=None)
    def pre(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        best = pre(i - 1, j - 1) + (0 if ref[i - 1] == hyp[j - 1] else 1)
        best = min(best, pre(i - 1, j) + 1)
        best = min(best, pre(i, j - 1) + 1)
        return best

    return pre


def edit_cost(ref, hyp):
    return edit_cost_and_table(ref, hyp)(len(ref), len(hyp))


def traceback(ref, hyp):
    """Ops as (kind, ref_index, hyp_index), matching the documented
    tie-break: Match > Substitute > Delete > Insert from the corner."""
    pre = edit_cost_and_table(ref, hyp)
    ops = []
    i, j = len(ref), len(hyp)
    while i > 0 or j > 0:
        here = pre(i, j)
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and here == pre(i - 1, j - 1):
            ops.append(("match", i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and ref[i - 1] != hyp[j - 1] and here == pre(i - 1, j - 1) + 1:
            ops.append(("substitute", i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and here == pre(i - 1, j) + 1:
            ops.append(("delete", i - 1, None))
            i = i - 1
        else:
            ops.append(("insert", None, j - 1))
            j = j - 1
    ops.reverse()
    return ops


def letter_tallies(line):
    letters = marks = marked = 0
    for base, (sh, vo) in [c for w in line.split(" ") if w for c in clusters(w)]:
        if not is_letter(base):
            continue
        letters += 1
        size = (1 if sh else 0) + (1 if vo else 0)
        marks += size
        if size:
            marked += 1
    return letters, marks, marked


def matched_pairs(ref_line, hyp_line):
    ref_words = [w for w in ref_line.split(" ") if w]
    hyp_words = [w for w in hyp_line.split(" ") if w]
    ops = traceback([strip_marks(w) for w in ref_words],
                    [strip_marks(w) for w in hyp_words])
    return [(ref_words[ri], hyp_words[hi]) for kind, ri, hi in ops if kind == "match"]


def precision_tally(pairs, include_case):
    compared = correct = 0
    for ref_word, hyp_word in pairs:
        rc = clusters(ref_word)
        hc = clusters(hyp_word)
        assert [b for b, _ in rc] == [b for b, _ in hc]
        last = len(rc) - 1
        for pos in range(len(rc)):
            if not include_case and pos == last:
                continue
            rm, hm = rc[pos][1], hc[pos][1]
            if rm == (False, None) or hm == (False, None):
                continue
            compared += 1
            if rm == hm:
                correct += 1
    return compared, correct


def der_tally(gold_line, pred_line, include_case):
    gold_words = [w for w in gold_line.split(" ") if w]
    pred_words = [w for w in pred_line.split(" ") if w]
    assert len(gold_words) == len(pred_words)
    counted = errors = 0
    for gw, pw in zip(gold_words, pred_words):
        gc, pc = clusters(gw), clusters(pw)
        assert [b for b, _ in gc] == [b for b, _ in pc]
        last = len(gc) - 1
        for pos in range(len(gc)):
            if not include_case and pos == last:
                continue
            gm, pm = gc[pos][1], pc[pos][1]
            if gm == (False, None):
                continue
            counted += 1
            if pm != gm:
                errors += 1
    return counted, errors


def ratio(num, den):
    return num / den if den else None


def asr_report(refs, hyps, condition_label, condition_tag):
    c = {name: 0 for name in [
        "records", "ref_words", "wer_errors_plain", "wer_errors_diac",
        "ref_chars_plain", "cer_errors_plain", "ref_chars_diac", "cer_errors_diac",
        "ref_letters", "ref_marks", "ref_marked_letters",
        "hyp_letters", "hyp_marks", "hyp_marked_letters", "matched_pairs",
        "compared_with_case", "correct_with_case",
        "compared_without_case", "correct_without_case"]}
    for ref, hyp in zip(refs, hyps):
        c["records"] += 1
        ref_words = [w for w in ref.split(" ") if w]
        hyp_words = [w for w in hyp.split(" ") if w]
        c["ref_words"] += len(ref_words)
        c["wer_errors_plain"] += edit_cost(
            [strip_marks(w) for w in ref_words], [strip_marks(w) for w in hyp_words])
        c["wer_errors_diac"] += edit_cost(ref_words, hyp_words)
        c["ref_chars_plain"] += len(strip_marks(ref))
        c["cer_errors_plain"] += edit_cost(list(strip_marks(ref)), list(strip_marks(hyp)))
        c["ref_chars_diac"] += len(ref)
        c["cer_errors_diac"] += edit_cost(list(ref), list(hyp))
        rl, rm, rk = letter_tallies(ref)
        hl, hm, hk = letter_tallies(hyp)
        c["ref_letters"] += rl
        c["ref_marks"] += rm
        c["ref_marked_letters"] += rk
        c["hyp_letters"] += hl
        c["hyp_marks"] += hm
        c["hyp_marked_letters"] += hk
        pairs = matched_pairs(ref, hyp)
        c["matched_pairs"] += len(pairs)
        cw, ow = precision_tally(pairs, True)
        c["compared_with_case"] += cw
        c["correct_with_case"] += ow
        cw, ow = precision_tally(pairs, False)
        c["compared_without_case"] += cw
        c["correct_without_case"] += ow
    metrics = {
        "wer_plain": ratio(c["wer_errors_plain"], c["ref_words"]),
        "cer_plain": ratio(c["cer_errors_plain"], c["ref_chars_plain"]),
        "wer_diac": ratio(c["wer_errors_diac"], c["ref_words"]),
        "cer_diac": ratio(c["cer_errors_diac"], c["ref_chars_diac"]),
        "coverage_ref": ratio(c["ref_marks"], c["ref_letters"]),
        "coverage_hyp": ratio(c["hyp_marks"], c["hyp_letters"]),
        "precision_with_case": ratio(c["correct_with_case"], c["compared_with_case"]),
        "precision_without_case": ratio(c["correct_without_case"], c["compared_without_case"]),
    }
    return {
        "kind": "asr",
        "condition": {"label": condition_label, "tag": condition_tag},
        "coverage_mode": "marks",
        "metrics": metrics,
        "counts": c,
    }


def diacritizer_report(golds, preds):
    c = {name: 0 for name in [
        "records", "letters", "gold_marks", "gold_marked_letters",
        "predicted_marks", "predicted_marked_letters",
        "counted_with_case", "errors_with_case",
        "counted_without_case", "errors_without_case"]}
    for gold, pred in zip(golds, preds):
        c["records"] += 1
        gl, gm, gk = letter_tallies(gold)
        pl, pm, pk = letter_tallies(pred)
        assert gl == pl
        c["letters"] += gl
        c["gold_marks"] += gm
        c["gold_marked_letters"] += gk
        c["predicted_marks"] += pm
        c["predicted_marked_letters"] += pk
        n, e = der_tally(gold, pred, True)
        c["counted_with_case"] += n
        c["errors_with_case"] += e
        n, e = der_tally(gold, pred, False)
        c["counted_without_case"] += n
        c["errors_without_case"] += e
    metrics = {
        "coverage": ratio(c["predicted_marks"], c["letters"]),
        "der_with_case": ratio(c["errors_with_case"], c["counted_with_case"]),
        "der_without_case": ratio(c["errors_without_case"], c["counted_without_case"]),
    }
    return {"kind": "diacritizer", "coverage_mode": "marks",
            "metrics": metrics, "counts": c}


def train_lexicon(lines):
    tally = {}
    for line in lines:
        for word in [w for w in line.split(" ") if w]:
            key = strip_marks(word)
            tally.setdefault(key, {})
            tally[key][word] = tally[key].get(word, 0) + 1
    top = {}
    for key, forms in tally.items():
        ranked = sorted(forms.items(), key=lambda kv: (-kv[1], kv[0]))
        top[key] = ranked[0][0]
    return top


def restore_line(lexicon, line):
    out = []
    for word in [w for w in line.split(" ") if w]:
        out.append(lexicon.get(strip_marks(word), word))
    return " ".join(out)


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    fixtures = os.path.normpath(os.path.join(here, "..", "fixtures"))

    def read_lines(name):
        with open(os.path.join(fixtures, name), encoding="utf-8") as f:
            lines = [ln.rstrip("\n") for ln in f]
        for ln in lines:
            check_canonical(ln)
        return lines

    refs = read_lines("mini_ref.txt")
    hyps = read_lines("mini_hyp.txt")
    train = read_lines("mini_train.txt")
    assert len(refs) == len(hyps) == 20

    lexicon = train_lexicon(train)

    reports = {
        "mini_expected.json": asr_report(refs, hyps, "MD", "MD"),
        "pipeline_expected.json": asr_report(
            refs, [restore_line(lexicon, strip_marks(h)) for h in hyps],
            "UD", "UD+lexicon"),
        "diac_expected.json": diacritizer_report(
            refs, [restore_line(lexicon, strip_marks(r)) for r in refs]),
    }
    for name, report in reports.items():
        path = os.path.join(fixtures, name)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(report, f, ensure_ascii=False, indent=2)
            f.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
