"""Generate the synthetic six-university fixture corpus.

The original encyclopedia revisions are not redistributable here, so the
fixture is a deterministic synthetic text with the same headline
statistics: 1933 whitespace-separated words, 842 of them distinct, and
12874 characters once whitespace runs are collapsed to single spaces.
"""
import random
import sys

BASE = """
university college campus research students faculty founded public private
institution school graduate undergraduate academic programs degrees science
engineering law medicine business arts history library libraries museum
located city state california massachusetts new jersey illinois cambridge
berkeley stanford princeton harvard urbana champaign institute technology
members alumni nobel laureates prize winners fields medal turing award
professors endowment billion dollars largest oldest among world ranked top
national international athletics teams conference division sports football
basketball rowing olympic medals president presidents government leaders
senators justices supreme court founders companies startups silicon valley
innovation discovery laboratory laboratories federal funding grants energy
department physics chemistry biology mathematics computer economics
psychology philosophy literature languages music theater architecture
agriculture veterinary nursing education journalism public policy affairs
housing residential dormitories fraternities sororities clubs organizations
student union newspaper radio station alumni association foundation trustees
board regents system campuses enrollment admission acceptance rate selective
competitive scholarship financial aid tuition fees undergraduates graduates
doctoral masters bachelors postdoctoral fellows researchers scientists
discoveries inventions patents industry partnerships collaboration global
community service volunteer culture traditions rivalry game annual event
commencement ceremony year years century centuries during after before since
war civil revolution colonial era period modern contemporary early late
building buildings hall halls tower quad green gardens arboretum stadium arena
gymnasium center centers facilities acres land grant morrill act charter
established chartered named honor benefactor donor gift estate fortune
railroad magnate senator governor wife son daughter memory memorial
the of and in to a is was for as by with on at from that which its are
it has have been also their this were one first other more than most many
two three four five six seven eight nine ten hundred thousand million
""".split()


def main(out_path):
    rng = random.Random(2014)
    base = list(dict.fromkeys(BASE))
    variants = []
    for w in base:
        variants.append(w)
    for w in base:
        variants.append(w.capitalize())
    for w in base:
        variants.append(w + ",")
    for w in base:
        variants.append(w + ".")
    for year in range(1636, 2015, 7):
        variants.append(str(year))
    variants = list(dict.fromkeys(variants))
    rng.shuffle(variants)
    vocab = variants[:842]
    assert len(set(vocab)) == 842

    total_words = 1933
    target_chars = 12874
    # Zipf-like weights give a text-shaped frequency profile.
    weights = [1.0 / (i + 1) ** 0.9 for i in range(len(vocab))]
    seq = list(vocab)
    seq += rng.choices(vocab, weights=weights, k=total_words - len(vocab))
    rng.shuffle(seq)

    def chars(s):
        return sum(len(w) for w in s) + len(s) - 1

    # Nudge total length onto the target by trading extra occurrences of
    # repeated words for longer or shorter repeated words.
    counts = {}
    for w in seq:
        counts[w] = counts.get(w, 0) + 1
    guard = 0
    while chars(seq) != target_chars:
        guard += 1
        assert guard < 100000
        diff = target_chars - chars(seq)
        i = rng.randrange(len(seq))
        w = seq[i]
        if counts[w] < 2:
            continue
        cands = [v for v in vocab if 0 < (len(v) - len(w)) * (1 if diff > 0 else -1) <= abs(diff)]
        if not cands:
            continue
        v = rng.choice(cands)
        counts[w] -= 1
        counts[v] = counts.get(v, 0) + 1
        seq[i] = v
    assert len(seq) == total_words and len(set(seq)) == 842 and chars(seq) == target_chars

    lines, line = [], []
    for w in seq:
        line.append(w)
        if len(line) >= 12 and w.endswith("."):
            lines.append(" ".join(line))
            line = []
    if line:
        lines.append(" ".join(line))
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
