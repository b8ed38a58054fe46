from typing import Optional

import psutil


class LoadChecker:
    cpu_count = psutil.cpu_count() or 1
    """Number of logical processors.

    Number of threads that can be handled simultaneously. If simultaneous
    multi-threading is enabled, this value would be larger than the number of CPU
    cores.

    """

    def default_workers(self, requested: Optional[int] = None, /) -> int:
        """Worker count for enumeration pools.

        ``requested`` wins when given; otherwise all logical processors but one are
        used, never less than one.

        """
        if requested is not None:
            if requested < 1:
                raise ValueError(f"Worker count must be positive, got {requested}.")
            return int(requested)
        return max(1, self.cpu_count - 1)
