from enum import StrEnum

from counting.counting import binomial


class PokerHand(StrEnum):
    ROYAL_FLUSH = "royal_flush"
    STRAIGHT_FLUSH = "straight_flush"
    FOUR_OF_A_KIND = "four_of_a_kind"
    FULL_HOUSE = "full_house"
    FLUSH = "flush"
    STRAIGHT = "straight"
    THREE_OF_A_KIND = "three_of_a_kind"
    TWO_PAIR = "two_pair"
    PAIR = "pair"
    HIGH_CARD = "high_card"


VALUES = 13
SUITS = 4
# runs start at Ace through 10
RUN_STARTS = 10


def poker_count(hand: PokerHand | str) -> int:
    """Number of 5-card hands from a standard 52-card deck in the given category."""
    hand = PokerHand(hand)
    royal = binomial(SUITS, 1)
    all_flush_runs = RUN_STARTS * SUITS
    match hand:
        case PokerHand.ROYAL_FLUSH:
            return royal
        case PokerHand.STRAIGHT_FLUSH:
            return all_flush_runs - royal
        case PokerHand.FOUR_OF_A_KIND:
            return VALUES * 48
        case PokerHand.FULL_HOUSE:
            return VALUES * binomial(4, 3) * 12 * binomial(4, 2)
        case PokerHand.FLUSH:
            return SUITS * binomial(VALUES, 5) - all_flush_runs
        case PokerHand.STRAIGHT:
            return RUN_STARTS * SUITS**5 - all_flush_runs
        case PokerHand.THREE_OF_A_KIND:
            return VALUES * binomial(4, 3) * (48 * 44) // 2
        case PokerHand.TWO_PAIR:
            return binomial(VALUES, 2) * binomial(4, 2) ** 2 * 11 * 4
        case PokerHand.PAIR:
            return VALUES * binomial(4, 2) * (48 * 44 * 40) // 6
        case PokerHand.HIGH_CARD:
            # five distinct values that are not a run, suits not all equal
            return (binomial(VALUES, 5) - RUN_STARTS) * (SUITS**5 - SUITS)
    raise ValueError(f"unknown hand {hand!r}")


def poker_table() -> dict[PokerHand, int]:
    return {hand: poker_count(hand) for hand in PokerHand}
