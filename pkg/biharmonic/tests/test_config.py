import os
import shutil
import tempfile
from io import StringIO
from unittest import TestCase
from unittest.mock import patch

import yaml

from biharmonic import BIHARMONIC_DEFAULT_CONFIG_DATA
from biharmonic.cli.main import main
from biharmonic.config_manager import CONFIG_FILE_NAME, ConfigManager
from biharmonic.report_utils import (
    CheckResult,
    CheckStatus,
    MessageType,
    ToolResponse,
    error_message,
    success_message,
    summarize_checks,
    tool_message,
)


class ReportUtilsTestCase(TestCase):
    """Test cases for report_utils module."""

    def test_tool_message_basic(self):
        """Test basic tool message creation."""
        result = tool_message(success=True, message="Done", data={"key": "value"})

        self.assertTrue(result["success"])
        self.assertEqual(result["message"], "Done")
        self.assertEqual(result["data"], {"key": "value"})
        self.assertEqual(result["message_type"], "success")
        self.assertEqual(result["error_details"], [])

    def test_error_message(self):
        """error_message marks failure and keeps the detail lines."""
        result = error_message("Failed", ["first", "second"])

        self.assertFalse(result["success"])
        self.assertEqual(result["message_type"], "error")
        self.assertEqual(result["error_details"], ["first", "second"])

    def test_success_message(self):
        """success_message passes its data through with success set."""
        result = success_message(data={"config_path": "/tmp/biharmonic.yml"})

        self.assertTrue(result["success"])
        self.assertEqual(result["data"]["config_path"], "/tmp/biharmonic.yml")

    def test_tool_response_dataclass(self):
        """Test ToolResponse defaults its message type from success."""
        response = ToolResponse(success=False, message="No")

        self.assertEqual(response.message_type, MessageType.ERROR)
        self.assertEqual(response.error_details, [])
        self.assertEqual(response.data, {})

    def test_check_result(self):
        """Test rendering and summarising battery lines."""
        passed = CheckResult("a", "1", "1", CheckStatus.PASS, citation="cite")
        failed = CheckResult("b", "1", "2", CheckStatus.FAIL, notes=["printed 3"])

        self.assertEqual(passed.render(), "a  expected 1 [cite]  got 1  PASS")
        self.assertIn("note: printed 3", failed.render())
        self.assertEqual(failed.to_dict()["status"], "FAIL")
        self.assertEqual(
            summarize_checks([passed, failed]),
            {"total": 2, "passed": 1, "failed": ["b"]},
        )


class ConfigManagerTestCase(TestCase):
    """Test cases for config_manager module."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()
        self.config_path = os.path.join(self.temp_dir, CONFIG_FILE_NAME)

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def write_config(self, data):
        with open(self.config_path, "w") as f:
            yaml.safe_dump(data, f)

    def test_get_config_file_path(self):
        """Test config file path in the working directory."""
        path = ConfigManager.get_config_file_path()
        self.assertEqual(path, os.path.join(os.getcwd(), "biharmonic.yml"))

    def test_validate_config_data_valid(self):
        """Test config validation with valid data."""
        is_valid, errors = ConfigManager.validate_config_data(
            {"numcheck": {"seed": 7, "tol": 1e-8}, "logging": {"level": "info"}}
        )

        self.assertTrue(is_valid)
        self.assertEqual(errors, [])

    def test_validate_config_data_invalid(self):
        """Test config validation with invalid data."""
        is_valid, errors = ConfigManager.validate_config_data(
            {
                "numcheck": {"points": 0, "seed": "seven", "unknown": 1},
                "verify": {"workers": True},
                "plots": {},
                "logging": {"level": "LOUD"},
            }
        )

        self.assertFalse(is_valid)
        self.assertEqual(len(errors), 6)
        self.assertFalse(ConfigManager.validate_config_data(["numcheck"])[0])

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_generate_config_success(self, mock_path):
        """Test successful config generation."""
        mock_path.return_value = self.config_path

        result = ConfigManager.generate_config()

        self.assertTrue(result["success"])
        with open(self.config_path) as f:
            self.assertEqual(yaml.safe_load(f), BIHARMONIC_DEFAULT_CONFIG_DATA)

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_generate_config_overwrite(self, mock_path):
        """Test config generation refuses to overwrite unless asked."""
        mock_path.return_value = self.config_path

        ConfigManager.generate_config()
        refused = ConfigManager.generate_config()
        result = ConfigManager.generate_config(overwrite=True)

        self.assertFalse(refused["success"])
        self.assertTrue(result["success"])

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_get_settings_merges_the_file(self, mock_path):
        """Test settings overlay the file on the defaults."""
        mock_path.return_value = self.config_path
        self.write_config({"numcheck": {"points": 12}})

        settings = ConfigManager.get_settings()

        self.assertEqual(settings["numcheck"]["points"], 12)
        self.assertEqual(
            settings["numcheck"]["seed"],
            BIHARMONIC_DEFAULT_CONFIG_DATA["numcheck"]["seed"],
        )
        self.assertEqual(BIHARMONIC_DEFAULT_CONFIG_DATA["numcheck"]["points"], 200)

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_invalid_file_falls_back_to_defaults(self, mock_path):
        """Test invalid or unparsable files are ignored."""
        mock_path.return_value = self.config_path
        self.write_config({"numcheck": {"points": -1}})
        self.assertIsNone(ConfigManager.get_config_data_from_config_file())

        with open(self.config_path, "w") as f:
            f.write("numcheck: [unclosed")
        self.assertIsNone(ConfigManager.get_config_data_from_config_file())
        self.assertEqual(ConfigManager.get_settings(), BIHARMONIC_DEFAULT_CONFIG_DATA)

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_missing_file(self, mock_path):
        """A missing settings file reads as no data."""
        mock_path.return_value = self.config_path
        self.assertIsNone(ConfigManager.get_config_data_from_config_file())

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_init_config_command(self, mock_path):
        """Test the init-config command writes the file and reports JSON."""
        mock_path.return_value = self.config_path
        out = StringIO()

        code = main(["init-config"], out=out)

        self.assertEqual(code, 0)
        self.assertIn('"success": true', out.getvalue())
        self.assertEqual(main(["init-config"], out=StringIO()), 1)
        self.assertEqual(main(["init-config", "--overwrite"], out=StringIO()), 0)

    @patch("biharmonic.config_manager.ConfigManager.get_config_file_path")
    def test_configured_points_reach_analyze(self, mock_path):
        """Test numcheck settings from the file drive the referee."""
        mock_path.return_value = self.config_path
        self.write_config({"numcheck": {"points": 7, "seed": 99}})
        out = StringIO()

        self.assertEqual(main(["analyze", "circle:2"], out=out), 0)
        self.assertIn('"points": 7', out.getvalue())
        self.assertIn('"seed": 99', out.getvalue())
