"""
Hamming codes with independent fair data bits and computed parity bits.

Bit positions run 1..n. Positions that are powers of two hold parity bits,
the others hold data bits d(1)..d(k) in order. Parity bit 2^j is the XOR of
every other position whose index has bit j set. For 4 data bits this is the
(7,4) code.

Evidence fixes `evidence_count` positions to the values of a codeword drawn
from the bench seed, so it is always satisfiable. The query asks whether the
first data bit outside the evidence is 1.
"""
import random

from bench_creation.bench_spec import BenchSpec
from classes.errors import UsageError


def code_layout(data_bits):
    """(total positions, parity positions, data positions)."""
    parity = 0
    while 2 ** parity < data_bits + parity + 1:
        parity += 1
    total = data_bits + parity
    parity_positions = [2 ** j for j in range(parity)]
    data_positions = [pos for pos in range(1, total + 1) if pos not in parity_positions]
    return total, parity_positions, data_positions


def covered_positions(parity_position, total):
    return [pos for pos in range(1, total + 1) if pos & parity_position and pos != parity_position]


def encode(data, data_bits):
    """Codeword as {position: bit} for a list of data bits."""
    total, parity_positions, data_positions = code_layout(data_bits)
    word = dict(zip(data_positions, data))
    for parity_position in parity_positions:
        value = 0
        for pos in covered_positions(parity_position, total):
            value ^= word[pos]
        word[parity_position] = value
    return word


def _parity_rule(parity_position, total):
    covered = covered_positions(parity_position, total)
    names = [f"B{pos}" for pos in covered]
    goals = [f"bit({pos},{name})" for pos, name in zip(covered, names)]
    if len(names) == 1:
        goals.append(f"V = {names[0]}")
    else:
        accumulator = names[0]
        for index, name in enumerate(names[1:], start=1):
            target = "V" if index == len(names) - 1 else f"T{index}"
            goals.append(f"xor({accumulator},{name},{target})")
            accumulator = target
    return f"bit({parity_position},V) :- {', '.join(goals)}."


def gen_hamming(data_bits, evidence_count=None, seed=0):
    if data_bits < 1:
        raise UsageError(f"a Hamming code needs at least one data bit, got {data_bits}")
    total, parity_positions, data_positions = code_layout(data_bits)
    if evidence_count is None:
        evidence_count = len(parity_positions)
    if not 0 <= evidence_count < total:
        raise UsageError(f"evidence count must be in [0, {total - 1}], got {evidence_count}")
    rng = random.Random(seed)

    data = [rng.randint(0, 1) for _ in range(data_bits)]
    word = encode(data, data_bits)
    # the query bit is the first data bit; evidence comes from the other positions
    query_position = data_positions[0]
    others = [pos for pos in range(1, total + 1) if pos != query_position]
    evidence_positions = sorted(rng.sample(others, evidence_count))

    lines = ["values(d(_), [0,1])."]
    lines.extend(f":- set_sw(d({k}), [0.5,0.5])." for k in range(1, data_bits + 1))
    lines.append("")
    lines.extend(["xor(0,0,0).", "xor(0,1,1).", "xor(1,0,1).", "xor(1,1,0)."])
    for k, pos in enumerate(data_positions, start=1):
        lines.append(f"bit({pos},V) :- msw(d({k}),V).")
    for parity_position in parity_positions:
        lines.append(_parity_rule(parity_position, total))
    if evidence_positions:
        body = ", ".join(f"bit({pos},{word[pos]})" for pos in evidence_positions)
        lines.append(f"evidence :- {body}.")
    else:
        lines.append("evidence.")
    lines.append(f"query :- bit({query_position},1).")
    text = "\n".join(lines) + "\n"
    return BenchSpec.build("hamming", text, "query", "evidence", seed,
                           data_bits=data_bits, evidence_count=evidence_count)
