from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Union


class MessageType(Enum):
    """Enum for message types."""

    SUCCESS = "success"
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass
class ToolResponse:
    """Structured result of init-config and of failed commands."""

    success: bool
    message: str
    error_details: List[Union[str, Any]] = None
    data: Union[Dict[str, Any], Any] = None
    message_type: MessageType = None

    def __post_init__(self) -> None:
        if self.error_details is None:
            self.error_details = []
        if self.data is None:
            self.data = {}
        if self.message_type is None:
            self.message_type = (
                MessageType.SUCCESS if self.success else MessageType.ERROR
            )

    def to_dict(self) -> Dict[str, Any]:
        """Convert response to dictionary format."""
        return {
            "success": self.success,
            "message": self.message,
            "error_details": self.error_details,
            "data": self.data,
            "message_type": self.message_type.value,
        }


def tool_message(
    success: bool = False,
    message: str = "An error occurred",
    error_details: Optional[List[Union[str, Any]]] = None,
    data: Optional[Union[Dict[str, Any], Any]] = None,
    message_type: Optional[MessageType] = None,
) -> Dict[str, Any]:
    """
    Create a standardized response message.

    Args:
        success: Whether the operation was successful
        message: Human-readable message
        error_details: List of detailed error information
        data: Response data payload
        message_type: Type of message (success, error, warning, info)

    Returns:
        Dictionary with standardized response format
    """
    response = ToolResponse(
        success=success,
        message=message,
        error_details=error_details or [],
        data=data or {},
        message_type=message_type,
    )
    return response.to_dict()


def success_message(
    message: str = "Operation completed successfully",
    data: Optional[Union[Dict[str, Any], Any]] = None,
) -> Dict[str, Any]:
    """Create a success response message."""
    return tool_message(
        success=True, message=message, data=data, message_type=MessageType.SUCCESS
    )


def error_message(
    message: str = "An error occurred",
    error_details: Optional[List[Union[str, Any]]] = None,
) -> Dict[str, Any]:
    """Create an error response message."""
    return tool_message(
        success=False,
        message=message,
        error_details=error_details or [],
        message_type=MessageType.ERROR,
    )


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class CheckResult:
    """One line of the verification battery."""

    check_id: str
    expected: str
    got: str
    status: CheckStatus
    citation: str = ""
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.check_id,
            "expected": self.expected,
            "got": self.got,
            "status": self.status.value,
            "citation": self.citation,
            "notes": list(self.notes),
        }

    def render(self) -> str:
        line = f"{self.check_id}  expected {self.expected}"
        if self.citation:
            line += f" [{self.citation}]"
        line += f"  got {self.got}  {self.status.value}"
        for note in self.notes:
            line += f"\n    note: {note}"
        return line


def summarize_checks(results: Iterable[CheckResult]) -> Dict[str, Any]:
    results = list(results)
    failed = [r.check_id for r in results if not r.passed]
    return {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": failed,
    }
