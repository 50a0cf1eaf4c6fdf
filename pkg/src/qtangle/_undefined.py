from typing import ClassVar, final


@final
class Undefined:
    """Sentinel for a configuration key that no provider defines."""

    INSTANCE: ClassVar["Undefined"]


Undefined.INSTANCE = Undefined()
