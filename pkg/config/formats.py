# All text formats are versioned and declared in this module. Do not hardcode
# headers elsewhere; reference these constants or add a new versioned entry here.

# --- Map format (v1): rotation system of a bipolar orientation, clockwise, y-axis up ---
MAP_FORMAT_V1 = "MAP v1"

# Line keywords of MAP v1, in emission order
MAP_V1_KEYWORDS = ("vertices", "edges", "rot", "source", "sink", "outer")

# --- Count tables: TSV, rows sorted lexicographically ---
COUNTS_TSV_HEADER_V1 = "n\tm\ti\tj\tk\tl\tcount"

# --- Insertion sequences: letter L/R followed by decimal k, space separated ---
INSERTION_SEQ_PATTERN_V1 = r"^([LR])([1-9][0-9]*)$"

# Registry of all versioned formats for lookup and auditing
FORMAT_REGISTRY = {
    "map_v1": MAP_FORMAT_V1,
    "counts_tsv_v1": COUNTS_TSV_HEADER_V1,
    "insertion_seq_v1": INSERTION_SEQ_PATTERN_V1,
}
