from selfconverse.core.observability.tracer import Span, Tracer, tracer

__all__ = ["Span", "Tracer", "tracer"]
