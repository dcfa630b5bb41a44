"""Thread-safety smoke tests: values are immutable and caches deterministic."""

import threading
from fractions import Fraction

import twistsum.bernoulli_euler as be
from twistsum.bernoulli_euler import TwistSpec, bernoulli_numbers
from twistsum.powersum import SumSpec, brute_sum, closed_sum


def run_threads(worker, count=8):
    results = [None] * count
    errors = []

    def wrap(i):
        try:
            results[i] = worker(i)
        except Exception as exc:  # surfaced by the assertion below
            errors.append(exc)

    threads = [threading.Thread(target=wrap, args=(i,)) for i in range(count)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors, errors
    return results


def test_bernoulli_cache_is_deterministic_under_contention():
    be._bernoulli_cache.clear()
    values = run_threads(lambda i: bernoulli_numbers(40)[40])
    assert all(v == Fraction(-261082718496449122051, 13530) for v in values)


def test_concurrent_sums_agree():
    spec = SumSpec.of((3, 1), (20, 30), 0, 3, 2, 1)
    expected = brute_sum(spec)
    values = run_threads(lambda i: (brute_sum if i % 2 else closed_sum)(spec))
    assert all(v == expected for v in values)


def test_concurrent_generalized_euler_values():
    twist = TwistSpec(3, 1)
    expected = be.gen_euler_numbers(8, twist, (1, 2))
    values = run_threads(lambda i: be.gen_euler_numbers(8, twist, (1, 2)))
    assert all(v == expected for v in values)
