#!/usr/bin/env python3
"""Download the college football network and convert it to an edge list.

Writes data/football.txt (115 nodes, 613 edges) relative to the repo
root.  The acceptance suite picks that file up automatically; point
CLUSTERDEL_FOOTBALL elsewhere to override.  Needs network access.
"""
from __future__ import annotations

import io
import re
import sys
import urllib.error
import urllib.request
import zipfile
from pathlib import Path

URL = "https://websites.umich.edu/~mejn/netdata/football.zip"
FALLBACK_URL = "http://www-personal.umich.edu/~mejn/netdata/football.zip"
EDGE_RE = re.compile(r"edge\s*\[\s*source\s+(\d+)\s+target\s+(\d+)", re.S)


def gml_edges(text: str) -> list[tuple[int, int]]:
    return [(int(a), int(b)) for a, b in EDGE_RE.findall(text)]


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "data" / "football.txt"
    payload = None
    for url in (URL, FALLBACK_URL):
        try:
            with urllib.request.urlopen(url, timeout=30) as resp:
                payload = resp.read()
            break
        except (urllib.error.URLError, OSError) as exc:
            print(f"fetch failed from {url}: {exc}", file=sys.stderr)
    if payload is None:
        print("could not download the football network; check connectivity "
              "or place an edge list at data/football.txt yourself",
              file=sys.stderr)
        return 1
    with zipfile.ZipFile(io.BytesIO(payload)) as zf:
        name = next(n for n in zf.namelist() if n.endswith("football.gml"))
        text = zf.read(name).decode("utf-8", errors="replace")
    edges = gml_edges(text)
    if len(edges) != 613:
        print(f"warning: expected 613 edges, parsed {len(edges)}",
              file=sys.stderr)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding="utf-8") as fh:
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    nodes = {u for e in edges for u in e}
    print(f"wrote {out_path} ({len(nodes)} nodes, {len(edges)} edges)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
