#!/usr/bin/env python3
"""Builds the synthetic fixture corpora under tests/fixtures/.

Words are composed from explicit codepoint escapes so the planted error
types (substitutions, deletions, insertions, diacritic-only errors,
unmarked positions) are exact and reviewable. Run from anywhere:

    python3 tests/oracle/make_fixtures.py
"""

import os

# -- letters ----------------------------------------------------------
HAMZA = "ء"
ALIF_HAMZA = "أ"
ALIF_HAMZA_BELOW = "إ"
ALIF = "ا"
BA = "ب"
TMARBUTA = "ة"
TA = "ت"
JIM = "ج"
HHA = "ح"
DAL = "د"
THAL = "ذ"
RA = "ر"
SIN = "س"
SHIN = "ش"
SAD = "ص"
TAH = "ط"
AIN = "ع"
FA = "ف"
QAF = "ق"
KAF = "ك"
LAM = "ل"
MIM = "م"
NUN = "ن"
HA = "ه"
WAW = "و"
MAKSURA = "ى"
YA = "ي"

# -- marks ------------------------------------------------------------
AN = "ً"  # fathatan
UN = "ٌ"  # dammatan
IN = "ٍ"  # kasratan
A = "َ"   # fatha
U = "ُ"   # damma
I = "ِ"   # kasra
SH = "ّ"  # shadda
SK = "ْ"  # sukun

# -- vocabulary (canonical: shadda precedes its vowel) ------------------
ALIMA = AIN + A + LAM + I + MIM + A
ALIMU = AIN + A + LAM + I + MIM + U
ALIMUU = AIN + A + LAM + I + MIM + U + WAW + ALIF
WAANSHADA = WAW + A + ALIF_HAMZA + A + NUN + SK + SHIN + A + DAL + A
ARRASHIDU = ALIF + LAM + RA + SH + A + SHIN + I + YA + DAL + U
ANI = AIN + A + NUN + I
ALMAHDIYYI = ALIF + LAM + SK + MIM + U + HA + SK + DAL + I + YA + SH + I
INFARADA = ALIF + NUN + SK + FA + A + RA + A + DAL + A
BISIRRIKA = BA + I + SIN + I + RA + SH + I + KAF + A
WALA = WAW + A + LAM + A + ALIF
TUDIAHU = TA + U + WAW + DAL + I + AIN + SK + HA + U
HARIMAN = HHA + A + ALIF + RA + I + MIM + AN + ALIF
YUFSIDU = YA + U + FA + SK + SIN + I + DAL + U
MAA = MIM + A + ALIF
HAWLAHU = HHA + A + WAW + SK + LAM + A + HA + U
LAKIN = LAM + A + KAF + I + NUN + SK
ITTABATU = ALIF + TA + SH + A + BA + A + AIN + SK + TA + U
FIHIM = FA + I + YA + HA + I + MIM + SK
KITABUN = KAF + I + TA + A + ALIF + BA + UN
KITABU = KAF + I + TA + A + ALIF + BA + U
KUTTABUN = KAF + U + TA + SH + A + ALIF + BA + UN
DHAHABA = THAL + A + HA + A + BA + A
ALWALADU = ALIF + LAM + SK + WAW + A + LAM + A + DAL + U
ILA = ALIF_HAMZA_BELOW + I + LAM + A + MAKSURA
ASSUQI = ALIF + LAM + SIN + SH + U + WAW + QAF + I
DARASA = DAL + A + RA + A + SIN + A
ATTALIBU = ALIF + LAM + TAH + SH + A + ALIF + LAM + I + BA + U
ADDARSA = ALIF + LAM + DAL + SH + A + RA + SK + SIN + A
QARAA = QAF + A + RA + A + ALIF_HAMZA + A
SHARIBA = SHIN + A + RA + I + BA + A
ALMAA = ALIF + LAM + SK + MIM + A + ALIF + HAMZA + A
SAMIA = SIN + A + MIM + I + AIN + A
ASSAWTA = ALIF + LAM + SAD + SH + A + WAW + SK + TA + A
JAMILUN = JIM + A + MIM + I + YA + LAM + UN

# planted error variants
DARASU = DAL + A + RA + A + SIN + U                                  # case-ending vowel change
ATTALIBU_BODY_ERR = ALIF + LAM + TAH + SH + A + ALIF + LAM + A + BA + U  # body kasra -> fatha
SHARIBA_UNMARKED = SHIN + A + RA + BA + A                            # middle kasra dropped
SAMIA_BARE = SIN + MIM + AIN                                         # fully stripped
ASSAWTA_BARE = ALIF + LAM + SAD + WAW + TA
BISIRRIKA_NO_SHADDA = BA + I + SIN + I + RA + I + KAF + A            # shadda dropped, kasra kept
HAWLAHA = HHA + A + WAW + SK + LAM + A + HA + A                      # final damma -> fatha
ITTABATU_BODY_ERR = ALIF + TA + SH + A + BA + I + AIN + SK + TA + U  # body fatha -> kasra
IMFARADU = ALIF + MIM + SK + FA + A + RA + A + DAL + U               # nun -> mim substitution
TUDAIIHU = TA + U + DAL + A + AIN + SH + I + HA + U                  # waw lost, geminated ain
ALMAHDIYYI_GAP = ALIF + LAM + SK + MIM + U + HA + SK + DAL + YA + SH + I  # dal kasra dropped
KUTTABU = KAF + U + TA + SH + A + ALIF + BA + U                      # dammatan -> damma

# -- mini evaluation corpus: 20 (ref, hyp) records ----------------------
MINI = [
    # 1: identical, fully diacritized
    ([ALIMA, WAANSHADA, ARRASHIDU, ANI, ALMAHDIYYI],
     [ALIMA, WAANSHADA, ARRASHIDU, ANI, ALMAHDIYYI]),
    # 2: diacritic-only error in a word body
    ([DARASA, ATTALIBU, ADDARSA], [DARASA, ATTALIBU_BODY_ERR, ADDARSA]),
    # 3: base-letter substitution (extra letters appended)
    ([ALIMA, WAANSHADA, ARRASHIDU], [ALIMUU, WAANSHADA, ARRASHIDU]),
    # 4: deletion
    ([DHAHABA, ALWALADU, ILA, ASSUQI], [DHAHABA, ALWALADU, ASSUQI]),
    # 5: insertion
    ([QARAA, ALWALADU, KITABUN], [QARAA, ALWALADU, KITABUN, JAMILUN]),
    # 6: unmarked position in the hypothesis
    ([SHARIBA, ALWALADU, ALMAA], [SHARIBA_UNMARKED, ALWALADU, ALMAA]),
    # 7: hypothesis fully undiacritized
    ([SAMIA, ASSAWTA], [SAMIA_BARE, ASSAWTA_BARE]),
    # 8: gemination dropped from a cluster
    ([INFARADA, BISIRRIKA, WALA], [INFARADA, BISIRRIKA_NO_SHADDA, WALA]),
    # 9: case-ending-only error
    ([YUFSIDU, MAA, HAWLAHU], [YUFSIDU, MAA, HAWLAHA]),
    # 10: diacritic error plus a deleted word
    ([LAKIN, ITTABATU, FIHIM, KITABUN], [LAKIN, ITTABATU_BODY_ERR, FIHIM]),
    # 11: identical, partially diacritized
    ([TUDIAHU, HARIMAN], [TUDIAHU, HARIMAN]),
    # 12: reference unmarked where hypothesis is marked
    ([SHARIBA_UNMARKED, ALMAA], [SHARIBA, ALMAA]),
    # 13: repeated stripped form, alignment must pick deterministically
    ([ALIMA, ALIMU], [ALIMA]),
    # 14: empty hypothesis line
    ([INFARADA, BISIRRIKA], []),
    # 15: digits and punctuation pass through
    ([DHAHABA, "123", DARASA + "."], [DHAHABA, "123", DARASA]),
    # 16: two substitutions with sound-alike diacritics
    ([INFARADA, BISIRRIKA, WALA, TUDIAHU, HARIMAN],
     [IMFARADU, BISIRRIKA, WALA, TUDAIIHU, HARIMAN]),
    # 17: swapped word order
    ([ALWALADU, QARAA], [QARAA, ALWALADU]),
    # 18: Latin tokens compared byte-exactly
    ([KITABUN, "Whisper", DARASA], [KITABUN, "whisper", DARASA]),
    # 19: tanween reduced to plain vowel at the case ending
    ([KUTTABUN, JAMILUN], [KUTTABU, JAMILUN]),
    # 20: unmarked position planted mid-word
    ([ALMAHDIYYI, ANI, ARRASHIDU], [ALMAHDIYYI_GAP, ANI, ARRASHIDU]),
]

# -- lexicon training text ----------------------------------------------
# "alima" is ambiguous 2:1. KITABUN/KITABU/KUTTABUN all strip to the same
# key (shadda is a mark), a three-way tie resolved by codepoint order of
# the diacritized form. The error variants above stay unknown.
TRAIN = [
    [ALIMA, WAANSHADA, ARRASHIDU, ANI, ALMAHDIYYI],
    [ALIMA, DARASA, ATTALIBU, ADDARSA],
    [ALIMU, KITABUN],
    [KITABU, DHAHABA, ALWALADU, ILA, ASSUQI],
    [QARAA, SHARIBA, ALMAA, SAMIA, ASSAWTA],
    [INFARADA, BISIRRIKA, WALA, TUDIAHU, HARIMAN],
    [YUFSIDU, MAA, HAWLAHU, LAKIN, ITTABATU, FIHIM],
    [KUTTABUN, JAMILUN, DARASA],
]

# every stripped form maps to exactly one diacritized form
TRAIN_UNAMBIGUOUS = [
    [ALIMA, WAANSHADA, ARRASHIDU, ANI, ALMAHDIYYI],
    [DHAHABA, ALWALADU, ILA, ASSUQI],
    [QARAA, SHARIBA, ALMAA],
    [SAMIA, ASSAWTA, DARASA],
    [KUTTABUN, JAMILUN, LAKIN, FIHIM],
]

# two lines, 13 letters, 11 marks: corpus coverage 11/13
IDENTITY = [
    [ALIMA, ARRASHIDU],
    [KUTTABUN],
]


def write_lines(path, sentences):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for words in sentences:
            f.write(" ".join(words) + "\n")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    fixtures = os.path.normpath(os.path.join(here, "..", "fixtures"))
    os.makedirs(fixtures, exist_ok=True)
    write_lines(os.path.join(fixtures, "mini_ref.txt"), [r for r, _ in MINI])
    write_lines(os.path.join(fixtures, "mini_hyp.txt"), [h for _, h in MINI])
    write_lines(os.path.join(fixtures, "mini_train.txt"), TRAIN)
    write_lines(os.path.join(fixtures, "train_unambiguous.txt"), TRAIN_UNAMBIGUOUS)
    write_lines(os.path.join(fixtures, "identity_corpus.txt"), IDENTITY)
    print("fixtures written to", fixtures)


if __name__ == "__main__":
    main()
