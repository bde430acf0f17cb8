class GuardrailExceeded(RuntimeError):
    """An exhaustive routine was asked to run beyond its configured size limit."""
