"""Console lines for self-verifying runs.

Each group of checks opens with a numbered banner; every check then prints one
``[ ok ]`` or ``[warn]`` line. Output goes to stdout so the preview mode can
capture it and re-render it in a panel.
"""

_RULE = "=" * 70


def banner(step: int, title: str) -> None:
    print(f"\n{_RULE}\nSTEP {step}: {title}\n{_RULE}")


def ok(msg: str) -> None:
    print(f"  [ ok ] {msg}")


def warn(msg: str) -> None:
    print(f"  [warn] {msg}")


def info(msg: str) -> None:
    print(f"         {msg}")


def check(passed: bool, msg: str, detail: str | None = None) -> bool:
    """Log one check outcome; failures get an indented detail line."""
    if passed:
        ok(msg)
    else:
        warn(msg)
        if detail:
            info(detail)
    return passed


__all__ = ["banner", "check", "info", "ok", "warn"]
