from pathlib import Path

F1 = Path(__file__).parent / "fixtures" / "f1"
KOS = "http://kosnet.dev/kos/"
AUTHOR = "http://kosnet.dev/data/author/"
PAPER = "http://kosnet.dev/data/paper/"
ORG = "http://kosnet.dev/data/org/"


def author(n):
    return f"{AUTHOR}a{n:02d}"
