"""Print the basicness flags and O'Nan-Scott types of the built-in group corpus."""
import sys
import os
import json

# Ensure the project root is in the Python path for module imports
_current_dir = os.path.dirname(os.path.abspath(__file__))
_project_root = os.path.dirname(_current_dir)
if _project_root not in sys.path:
    sys.path.insert(0, _project_root)

from src.errors import CapExceededError, ClassificationError
from src.graph import catalog_group
from src.lattice import lattice_L1, lattice_L2
from src.structure import (is_innately_transitive, is_primitive, is_quasiprimitive,
                           onan_scott_type)

DEFAULT_CORPUS = ["s_4", "a_5", "s_5", "a5_coset_c5", "d_8", "c_4", "c_6", "d_12", "agl_1_5",
                  "a5_x_c3_15", "a5_wr_c2_10", "pa_25", "hs_60", "sd_60"]


def corpus_row(name):
    """One summary row; sections beyond the caps are None."""
    G = catalog_group(name)
    row = {"name": name, "degree": G.degree, "order": G.order(),
           "primitive": is_primitive(G), "quasiprimitive": None,
           "innately_transitive": None, "tag": None, "l1_nodes": len(lattice_L1(G)),
           "l2_nodes": None}
    try:
        row["quasiprimitive"] = is_quasiprimitive(G)
        row["innately_transitive"] = is_innately_transitive(G)
        row["tag"] = onan_scott_type(G).tag.value
        row["l2_nodes"] = len(lattice_L2(G))
    except (CapExceededError, ClassificationError) as e:
        print(f"Warning: {name}: {e}", file=sys.stderr)
    return row


def _flag(value):
    return "-" if value is None else ("yes" if value else "no")


def print_summary_table(rows):
    """Print summary table of all rows."""
    print("=" * 100)
    print("GROUP CORPUS SUMMARY")
    print("=" * 100)
    print(f"{'Name':<14} {'Deg':>5} {'Order':>7} {'Prim':<6} {'QP':<6} {'IT':<6} "
          f"{'Type':<20} {'|L1|':>5} {'|L2|':>5}")
    print("-" * 100)

    for row in rows:
        l2 = "-" if row['l2_nodes'] is None else row['l2_nodes']
        print(f"{row['name']:<14} {row['degree']:>5} {row['order']:>7} "
              f"{_flag(row['primitive']):<6} {_flag(row['quasiprimitive']):<6} "
              f"{_flag(row['innately_transitive']):<6} {str(row['tag'] or '-'):<20} "
              f"{row['l1_nodes']:>5} {l2:>5}")


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    as_json = "--json" in argv
    names = [a for a in argv if a != "--json"] or DEFAULT_CORPUS

    rows = [corpus_row(name) for name in names]
    if as_json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"Found {len(rows)} groups\n")
        print_summary_table(rows)


if __name__ == '__main__':
    main()
