#!/usr/bin/env python3
"""Regenerate the .gm fixture corpus and its frozen expected winners.

games/NAME.gm        accepted inputs in assorted surface styles
games/NAME.expected  "even: ..." / "odd: ..." over compacted ids
malformed/NAME.gm    rejected inputs; malformed/NAME.expected holds "<kind> <line>"
"""

import random
from pathlib import Path

HERE = Path(__file__).resolve().parent


def attractor(vs, succ, owner, player, target):
    attr = set(target)
    count = {v: sum(1 for w in succ[v] if w in vs) for v in vs}
    pred = {v: [] for v in vs}
    for v in vs:
        for w in succ[v]:
            if w in vs:
                pred[w].append(v)
    queue = list(attr)
    while queue:
        w = queue.pop()
        for v in pred[w]:
            if v in attr:
                continue
            if owner[v] == player:
                attr.add(v)
                queue.append(v)
            else:
                count[v] -= 1
                if count[v] == 0:
                    attr.add(v)
                    queue.append(v)
    return attr


def zielonka(vs, succ, owner, prio):
    if not vs:
        return set(), set()
    top = max(prio[v] for v in vs)
    player = top % 2
    a = attractor(vs, succ, owner, player, {v for v in vs if prio[v] == top})
    w = zielonka(vs - a, succ, owner, prio)
    if not w[1 - player]:
        win = [set(), set()]
        win[player] = set(vs)
        return tuple(win)
    b = attractor(vs, succ, owner, 1 - player, w[1 - player])
    w2 = zielonka(vs - b, succ, owner, prio)
    win = [set(), set()]
    win[player] = set(w2[player])
    win[1 - player] = set(w2[1 - player]) | b
    return tuple(win)


def random_graph(rng, n, d, p):
    owner = [rng.randrange(2) for _ in range(n)]
    prio = [rng.randrange(d) for _ in range(n)]
    succ = []
    for v in range(n):
        s = sorted(w for w in range(n) if rng.random() < p)
        if not s:
            s = [rng.randrange(n)]
        succ.append(s)
    return owner, prio, succ


def render(owner, prio, succ, ids, header, names, spacing, dup_succ):
    lines = []
    if header:
        lines.append("parity %d;" % max(ids))
    order = list(range(len(owner)))
    for v in order:
        s = [ids[w] for w in succ[v]]
        if dup_succ and s:
            s = s + [s[0]]
        field = ",".join(str(x) for x in s)
        if spacing:
            field = " , ".join(str(x) for x in s)
        line = "%d %d %d %s" % (ids[v], prio[v], owner[v], field)
        if names:
            line += ' "v%d %s"' % (v, "q\\\"x" if v % 3 == 0 else "n")
        lines.append(line + ";")
    sep = "\n\n  " if spacing else "\n"
    return sep.join(lines) + "\n"


def write_game(name, text, owner, prio, succ):
    n = len(owner)
    even, odd = zielonka(set(range(n)), succ, owner, prio)
    assert even | odd == set(range(n)) and not even & odd
    (HERE / "games" / (name + ".gm")).write_text(text)
    exp = "even:" + "".join(" %d" % v for v in sorted(even)) + "\n"
    exp += "odd:" + "".join(" %d" % v for v in sorted(odd)) + "\n"
    (HERE / "games" / (name + ".expected")).write_text(exp)


MALFORMED = {
    "syntax_missing_semicolon": ("parity 1;\n0 1 0 1\n1 1 1 0;\n", "syntax", 3),
    "syntax_bad_owner": ("0 1 2 0;\n", "syntax", 1),
    "syntax_letter": ("0 1 0 x;\n", "syntax", 1),
    "syntax_unterminated_name": ('0 1 0 0 "abc;\n', "syntax", 1),
    "syntax_empty": ("\n\n", "syntax", 3),
    "syntax_trailing_comma": ("0 1 0 0,;\n", "syntax", 1),
    "duplicate_id": ("parity 1;\n0 1 0 1;\n1 2 1 0;\n0 3 0 0;\n", "duplicate-id", 4),
    "duplicate_id_sparse": ("7 1 0 7;\n9 1 0 7;\n7 0 0 9;\n", "duplicate-id", 3),
    "dangling_successor": ("parity 1;\n0 1 0 1;\n1 1 1 2;\n", "dangling-successor", 3),
    "dangling_successor_late": ("0 1 0 0;\n1 1 1 0,\n 5;\n", "dangling-successor", 3),
    "no_successors": ("parity 1;\n0 1 0 1;\n1 1 1;\n", "no-successors", 3),
    "no_successors_named": ('0 1 0 "lonely";\n', "no-successors", 1),
    "negative_priority": ("parity 1;\n0 1 0 1;\n1 -2 1 0;\n", "negative-priority", 3),
}


def main():
    (HERE / "games").mkdir(exist_ok=True)
    (HERE / "malformed").mkdir(exist_ok=True)
    for p in list((HERE / "games").glob("*")) + list((HERE / "malformed").glob("*")):
        p.unlink()

    # the two literal examples
    write_game("literal_two", "parity 1;\n0 2 0 1;\n1 1 1 1,0;", [0, 1], [2, 1], [[1], [0, 1]])
    write_game("even_self_loop", "0 0 0 0;", [0], [0], [[0]])
    write_game("odd_self_loop", "parity 0;\n0 1 1 0;\n", [1], [1], [[0]])

    rng = random.Random(20240611)
    styles = [
        dict(header=True, names=False, spacing=False, dup_succ=False, sparse=False),
        dict(header=False, names=False, spacing=False, dup_succ=False, sparse=False),
        dict(header=True, names=True, spacing=False, dup_succ=False, sparse=False),
        dict(header=False, names=True, spacing=True, dup_succ=False, sparse=True),
        dict(header=True, names=False, spacing=True, dup_succ=True, sparse=False),
        dict(header=False, names=False, spacing=False, dup_succ=False, sparse=True),
    ]
    idx = 0
    for n in (1, 2, 3, 4, 5, 6, 8, 10, 12, 16):
        for style in styles:
            d = rng.randrange(1, 7)
            p = rng.choice((0.2, 0.5, 0.9))
            owner, prio, succ = random_graph(rng, n, d, p)
            if style["sparse"]:
                ids = sorted(rng.sample(range(3 * n + 5), n))
                rng.shuffle(ids)
            else:
                ids = list(range(n))
            text = render(owner, prio, succ, ids, style["header"], style["names"], style["spacing"], style["dup_succ"])
            tag = "".join(k[0] for k, v in style.items() if v) or "plain"
            write_game("g%02d_n%d_%s" % (idx, n, tag), text, owner, prio, succ)
            idx += 1

    for name, (text, kind, line) in MALFORMED.items():
        (HERE / "malformed" / (name + ".gm")).write_text(text)
        (HERE / "malformed" / (name + ".expected")).write_text("%s %d\n" % (kind, line))


if __name__ == "__main__":
    main()
