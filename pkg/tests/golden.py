"""Hand-audited expected parses for the golden corpus (mode ivt).

Expected values were worked out by hand from the category seed lists and
the stemmer rules; they are frozen here as the wire-format dicts the
parser must reproduce exactly.
"""


def _now():
    return {"source": "defaulted_now", "term": "", "position": -1}


def _last_occurrence():
    return {"source": "inferred_last_occurrence", "term": "", "position": -1}


def _time(source, term, position):
    return {"source": source, "term": term, "position": position}


def _tuple(
    question_word=None,
    tense="present",
    times=(),
    subjects=(),
    qualifiers=(),
    aggregations=(),
    arms=None,
    mode="ivt",
):
    return {
        "question_word": question_word,
        "tense": tense,
        "times": list(times),
        "subjects": list(subjects),
        "qualifiers": list(qualifiers),
        "aggregations": list(aggregations),
        "is_comparison": arms is not None,
        "comparison_arms": [] if arms is None else [
            {"time": time, "aggregation": agg} for time, agg in arms
        ],
        "mode": mode,
    }


GOLDEN = [
    (
        "On average, how often do I eat daily?",
        _tuple(
            question_word="how-often",
            times=[_now()],
            subjects=["eat"],
            aggregations=["averag", "daili"],
        ),
    ),
    (
        "How often, do I eat, on average?",
        _tuple(
            question_word="how-often",
            times=[_now()],
            subjects=["eat"],
            aggregations=["averag"],
        ),
    ),
    (
        "When did I talk to Sally?",
        _tuple(
            question_word="when",
            tense="past",
            times=[_last_occurrence()],
            subjects=["talk"],
            qualifiers=["salli"],
        ),
    ),
    (
        "When will my next medical check-up be?",
        _tuple(
            question_word="when",
            tense="future",
            times=[_time("explicit_term", "next", 3)],
            subjects=["check-up"],
            qualifiers=["medic"],
            aggregations=["next"],
        ),
    ),
    (
        "Am I more active this month or last month?",
        _tuple(
            times=[
                _time("explicit_term", "this-month", 4),
                _time("explicit_term", "last-month", 6),
            ],
            subjects=["activ"],
            aggregations=["more"],
            arms=[
                (_time("explicit_term", "this-month", 4), "more"),
                (_time("explicit_term", "last-month", 6), "more"),
            ],
        ),
    ),
    (
        "Did I sleep more hours on average in March or June?",
        _tuple(
            tense="past",
            times=[
                _time("month_name", "march", 8),
                _time("month_name", "june", 10),
            ],
            subjects=["sleep"],
            qualifiers=["hour"],
            aggregations=["more", "averag"],
            arms=[
                (_time("month_name", "march", 8), "averag"),
                (_time("month_name", "june", 10), "averag"),
            ],
        ),
    ),
    (
        "find me a job that matches my qualifications.",
        _tuple(
            times=[_now()],
            subjects=["job"],
            qualifiers=["match", "qualif"],
        ),
    ),
    (
        "what are the available food deals?",
        _tuple(
            question_word="what",
            times=[_now()],
            subjects=["food", "deal"],
            qualifiers=["avail"],
        ),
    ),
]

# Queries whose tuples carry all three checked elements; the UI contract
# test types these and expects three green buttons.
FULLY_FORMED = [
    "On average, how often do I eat daily?",
    "How often, do I eat, on average?",
    "When did I talk to Sally?",
    "When will my next medical check-up be?",
    "what are the available food deals?",
]
