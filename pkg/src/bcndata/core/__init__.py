"""Core module for bcndata"""
