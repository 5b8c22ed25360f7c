import pytest

from selfconverse.core.observability.tracer import Tracer


def test_span_records_attributes_and_duration():
    tracer = Tracer()
    with tracer.start_span("blowup", trace_id="abc") as span:
        span.set_attribute("N", 6)
    assert tracer.finished == [span]
    assert span.trace_id == "abc"
    assert span.status == "OK"
    assert span.attributes == {"N": 6}
    assert span.end_time is not None
    assert span.duration_ms >= 0


def test_span_marks_errors():
    tracer = Tracer()
    with pytest.raises(KeyError):
        with tracer.start_span("verify"):
            raise KeyError("x")
    (span,) = tracer.finished
    assert span.status == "ERROR"
    assert span.attributes["error"] == "KeyError"


def test_finished_spans_are_bounded():
    tracer = Tracer()
    for k in range(100):
        with tracer.start_span(f"stage-{k}"):
            pass
    assert len(tracer.finished) == 64
    assert tracer.finished[-1].name == "stage-99"
    assert tracer.finished[0].name == "stage-36"
