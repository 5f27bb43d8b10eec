from fractions import Fraction

FLOAT_DIGITS = 12


def parse_rational(value: str) -> Fraction:
    """Parses ``p``, ``p/q`` or a finite decimal string into an exact Fraction."""
    text = value.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{value}' is not a valid rational number")


def parse_rational_list(value: str) -> list[Fraction]:
    """Parses a comma separated list of rationals, e.g. ``1,-1/2,3``."""
    if not value.strip():
        return []
    return [parse_rational(part) for part in value.split(",")]


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float | complex) -> str:
    """Formats a float (or complex) with 12 significant digits."""
    if isinstance(value, complex):
        if value.imag == 0:
            return format_float(value.real)
        sign = "+" if value.imag >= 0 else "-"
        return f"{format_float(value.real)}{sign}{format_float(abs(value.imag))}j"
    return f"{value:.{FLOAT_DIGITS}g}"
