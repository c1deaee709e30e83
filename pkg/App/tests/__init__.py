from .test_app import *