#!/usr/bin/env python3
"""Converts a PeerRead-style dataset tree into the JSONL corpus format.

The engine consumes one manuscript per line:

    {"id": str, "venue": str, "title": str, "abstract": str,
     "introduction": str, "accepted": true|false|null,
     "author_emails": [str], "references": [{"year": int,
     "authors": [str], "title": str}]}

A PeerRead venue directory holds `reviews/<id>.json` (title, abstract,
accepted flag) and `parsed_pdfs/<id>.pdf.json` (emails, sections,
references). Usage:

    peerread_convert.py --out corpus.jsonl \
        path/to/arxiv.cs.cl_2007-2017/train=arxiv_cl \
        path/to/iclr_2017/train=iclr_2017

Each positional argument is `directory=venue_tag`. Splits (train/dev/test)
can be converted separately or passed as separate arguments with the same
tag. Records without a recoverable title are skipped with a warning.
"""
import argparse
import glob
import json
import os
import re
import sys

INTRO_PATTERN = re.compile(r"introduction", re.IGNORECASE)


def load_json(path):
    if not os.path.exists(path):
        return None  # parsed_pdfs entries are missing for some papers
    try:
        with open(path, encoding="utf-8", errors="replace") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        print(f"warning: cannot parse {path}: {err}", file=sys.stderr)
        return None


def reference_records(metadata):
    out = []
    for ref in metadata.get("references") or []:
        authors = ref.get("author") or ref.get("authors") or []
        if isinstance(authors, str):
            authors = [authors]
        year = ref.get("year")
        title = (ref.get("title") or "").strip()
        if not title or not authors or not isinstance(year, int):
            continue
        out.append({"year": year, "authors": list(authors), "title": title})
    return out


def introduction_text(metadata):
    sections = metadata.get("sections") or []
    for section in sections:
        heading = section.get("heading") or ""
        if INTRO_PATTERN.search(heading):
            return section.get("text") or ""
    # fall back to the first section when headings were not recovered
    if sections:
        return sections[0].get("text") or ""
    return ""


def convert_venue(directory, venue, out, seen_ids):
    reviews_dir = os.path.join(directory, "reviews")
    pdfs_dir = os.path.join(directory, "parsed_pdfs")
    n_written = n_skipped = 0
    for review_path in sorted(glob.glob(os.path.join(reviews_dir, "*.json"))):
        paper_id = os.path.splitext(os.path.basename(review_path))[0]
        review = load_json(review_path) or {}
        pdf = load_json(os.path.join(pdfs_dir, paper_id + ".pdf.json")) or {}
        metadata = pdf.get("metadata") or {}

        title = (review.get("title") or metadata.get("title") or "").strip()
        if not title:
            print(f"warning: {venue}/{paper_id}: no title, skipped",
                  file=sys.stderr)
            n_skipped += 1
            continue
        record_id = f"{venue}/{paper_id}"
        if record_id in seen_ids:
            print(f"warning: duplicate id {record_id}, skipped",
                  file=sys.stderr)
            n_skipped += 1
            continue
        seen_ids.add(record_id)

        accepted = review.get("accepted")
        if not isinstance(accepted, bool):
            accepted = None
        record = {
            "id": record_id,
            "venue": venue,
            "title": title,
            "abstract": (review.get("abstract") or
                         metadata.get("abstractText") or "").strip(),
            "introduction": introduction_text(metadata).strip(),
            "accepted": accepted,
            "author_emails": list(metadata.get("emails") or []),
            "references": reference_records(metadata),
        }
        out.write(json.dumps(record, ensure_ascii=True) + "\n")
        n_written += 1
    return n_written, n_skipped


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("sources", nargs="+", metavar="DIR=VENUE",
                        help="venue directory and its tag, e.g. "
                             "data/iclr_2017/train=iclr_2017")
    parser.add_argument("--out", required=True, help="output JSONL path")
    args = parser.parse_args()

    seen_ids = set()
    total = skipped = 0
    with open(args.out, "w", encoding="utf-8") as out:
        for source in args.sources:
            if "=" not in source:
                parser.error(f"'{source}' is not of the form DIR=VENUE")
            directory, venue = source.rsplit("=", 1)
            if not os.path.isdir(directory):
                parser.error(f"not a directory: {directory}")
            n, s = convert_venue(directory, venue, out, seen_ids)
            print(f"{venue}: wrote {n} records, skipped {s}", file=sys.stderr)
            total += n
            skipped += s
    print(f"total: {total} records written, {skipped} skipped",
          file=sys.stderr)


if __name__ == "__main__":
    main()
