"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: configuration problems exit 2,
ingest/window-coverage failures exit 3, internal consistency failures exit 4.
"""


class NetdynError(Exception):
    """Base class for all netdyn errors."""


class ConfigurationError(NetdynError):
    """Invalid configuration or an invalid option/graph-mode combination."""


class IngestError(NetdynError):
    """Input could not be parsed into a usable event list."""


class WindowCoverageError(NetdynError):
    """Events fall outside the declared window boundaries."""

    def __init__(self, timestamps):
        self.timestamps = sorted(timestamps)
        shown = ", ".join(str(t) for t in self.timestamps[:10])
        more = "" if len(self.timestamps) <= 10 else f" (+{len(self.timestamps) - 10} more)"
        super().__init__(f"events outside declared windows at timestamps: {shown}{more}")


class ConsistencyError(NetdynError):
    """Internal invariant violated (dimension mismatch between pipeline stages)."""
