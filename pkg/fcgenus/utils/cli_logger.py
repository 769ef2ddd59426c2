"""
Terminal status output with emojis and styled text for the fcgenus CLI.
"""

import logging
from datetime import datetime
from typing import Optional

from rich.console import Console
from rich.markup import escape
from rich.theme import Theme

# Status goes to stderr so stdout stays clean for reports and edge lists.
console = Console(
    stderr=True,
    theme=Theme({
        "info": "cyan",
        "warning": "yellow",
        "error": "red",
        "success": "green",
        "debug": "blue",
    }),
)


class CliLogger:
    """CLI status logger with emojis and styled output."""

    EMOJI_MAP = {
        # Run states
        "startup": "🚀",
        "done": "✅",
        "error": "❌",
        "warning": "⚠️",
        "processing": "⚡",
        # Pipeline stages
        "graph": "🕸️",
        "tree": "🌳",
        "cycles": "🔁",
        "matching": "🔗",
        "genus": "🍩",
        # Verification
        "oracle": "🔮",
        "counterexample": "🧨",
        "budget": "⛔",
        # Files
        "read": "📥",
        "write": "📤",
        "generate": "🏭",
        "performance": "⏱️",
    }

    quiet = False

    @classmethod
    def style_message(cls, message: str, context: str, details: Optional[dict] = None) -> str:
        """Style a message with emoji and optional details."""
        emoji = cls.EMOJI_MAP.get(context, "🔹")
        timestamp = datetime.now().strftime("%H:%M:%S")

        styled_msg = f"[{timestamp}] {emoji} {escape(message)}"

        if details:
            details_str = " ".join([f"[bold]{k}:[/bold] {escape(str(v))}" for k, v in details.items()])
            styled_msg += f"\n       ├─ {details_str}"

        return styled_msg

    @classmethod
    def _emit(cls, message: str, context: str, style: str, details: dict):
        if cls.quiet and style not in ("error", "warning"):
            return
        console.print(cls.style_message(message, context, details), style=style, highlight=False)

    @classmethod
    def info(cls, message: str, context: str = "info", **kwargs):
        cls._emit(message, context, "info", kwargs)

    @classmethod
    def success(cls, message: str, context: str = "done", **kwargs):
        cls._emit(message, context, "success", kwargs)

    @classmethod
    def warning(cls, message: str, context: str = "warning", **kwargs):
        cls._emit(message, context, "warning", kwargs)

    @classmethod
    def error(cls, message: str, context: str = "error", **kwargs):
        cls._emit(message, context, "error", kwargs)

    @classmethod
    def debug(cls, message: str, context: str = "debug", **kwargs):
        if logging.getLogger("fcgenus").isEnabledFor(logging.DEBUG):
            cls._emit(message, context, "debug", kwargs)

    @classmethod
    def performance(cls, function_name: str, execution_time: float, **kwargs):
        """Log timing of a CLI stage."""
        details = {"time": f"{execution_time:.3f}s", **kwargs}
        cls._emit(f"Performance metrics for {function_name}", "performance", "info", details)

    @classmethod
    def pipeline_event(cls, event_type: str, message: str, **kwargs):
        """Log a pipeline stage event with the matching emoji."""
        context_map = {
            "graph": "graph",
            "tree": "tree",
            "cycles": "cycles",
            "matching": "matching",
            "genus": "genus",
            "oracle": "oracle",
        }
        context = context_map.get(event_type, "processing")
        cls._emit(message, context, "info", kwargs)

    @classmethod
    def file_event(cls, event_type: str, message: str, **kwargs):
        """Log file reads, writes and generated families."""
        context_map = {
            "read": "read",
            "write": "write",
            "generate": "generate",
        }
        context = context_map.get(event_type, "write")
        cls._emit(message, context, "info", kwargs)
