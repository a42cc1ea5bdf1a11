from .rational import parse_rational, format_rational, to_decimal

__all__ = ["parse_rational", "format_rational", "to_decimal"]
