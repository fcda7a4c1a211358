"""
Checking every small word
=========================

All identities, for every primitive necklace up to length 10.
"""
from lorenzknots import verify_corpus

# worker processes re-import this file on some platforms
if __name__ == "__main__":
    summary = verify_corpus(10, jobs=2)
    print(summary["passed"], "of", summary["words"], "words pass")
    print("words per length:", summary["per_length"])
    for name, count in summary["checks"].items():
        print(f"  {name:28s} {count}")
