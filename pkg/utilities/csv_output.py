import csv
from pathlib import Path

CHAIN_HEADER = ["iter", "estimate", "accepted", "evidence_ok", "cum_evidence_rejections", "elapsed_us"]
QSTORE_HEADER = ["switch", "instance", "outcome", "q", "c", "t"]
EXACT_HEADER = ["p_query", "p_evidence", "p_joint", "p_conditional", "leaf_count"]


def write_chain_csv(path, rows):
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(CHAIN_HEADER)
        for row in rows:
            writer.writerow(row.to_csv())


def chain_csv_path(path, chain_index):
    """trace.csv -> trace.chain0.csv"""
    path = Path(path)
    return path.with_name(f"{path.stem}.chain{chain_index}{path.suffix}")


def write_multi_chain_csv(path, results):
    """One file per chain plus their concatenation, in chain order, under `path`."""
    for index, result in enumerate(results):
        write_chain_csv(chain_csv_path(path, index), result.rows)
    with open(path, 'w', newline='') as merged:
        writer = csv.writer(merged)
        writer.writerow(CHAIN_HEADER)
        for index in range(len(results)):
            with open(chain_csv_path(path, index), 'r', newline='') as file:
                reader = csv.reader(file)
                next(reader)
                for row in reader:
                    writer.writerow(row)


def read_chain_csv(path):
    with open(path, 'r', newline='') as file:
        return list(csv.DictReader(file))


def write_qstore_csv(path, store):
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(QSTORE_HEADER)
        for switch, instance, outcome, q, c, t in store.rows():
            writer.writerow([switch, instance, outcome, f"{q:.12g}", c, f"{t:.12g}"])


def write_exact_csv(path, result):
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(EXACT_HEADER)
        writer.writerow([f"{result.p_query:.15g}", f"{result.p_evidence:.15g}", f"{result.p_joint:.15g}",
                         f"{result.p_conditional:.15g}", result.leaf_count])
